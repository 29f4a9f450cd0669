#include "rtg/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rtg {

void Presentation::add(const Relator& r) {
  auto it = std::lower_bound(relators.begin(), relators.end(), r);
  if (it == relators.end() || !(*it == r)) relators.insert(it, r);
}

bool Presentation::contains(const Relator& r) const {
  return std::binary_search(relators.begin(), relators.end(), r);
}

namespace {

Relator parse_relator_line(const std::string& line, std::uint32_t n, int line_no) {
  std::istringstream iss(line);
  std::string tok;
  std::array<LetterId, 3> w{};
  int got = 0;
  while (iss >> tok) {
    if (got == 3) throw ParseError("expected exactly three letters", line_no);
    auto l = parse_letter(tok, n);
    if (!l) throw ParseError("bad letter token '" + tok + "'", line_no);
    w[got++] = *l;
  }
  if (got != 3) throw ParseError("expected exactly three letters", line_no);
  RelatorError e = validate_relator(w[0], w[1], w[2], n);
  if (e != RelatorError::Ok) throw ParseError(relator_error_message(e), line_no);
  return Relator{w};
}

}  // namespace

Presentation parse_presentation_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_n = false;
  Presentation p;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::string body = line.substr(start);
    if (!have_n) {
      if (body.rfind("n=", 0) != 0) throw ParseError("expected header n=<int>", line_no);
      try {
        size_t used = 0;
        long long v = std::stoll(body.substr(2), &used);
        if (used != body.size() - 2 || v < 1 || v > static_cast<long long>(kMaxGenerators))
          throw std::invalid_argument("range");
        p.n = static_cast<std::uint32_t>(v);
      } catch (const std::exception&) {
        throw ParseError("bad generator count in header", line_no);
      }
      have_n = true;
      continue;
    }
    p.add(parse_relator_line(body, p.n, line_no));
  }
  if (!have_n) throw ParseError("missing header n=<int>", line_no + 1);
  return p;
}

std::string serialize_presentation_text(const Presentation& p) {
  std::ostringstream out;
  out << "# rtg presentation format v1\n";
  out << "n=" << p.n << "\n";
  for (const Relator& r : p.relators) out << r.str() << "\n";
  return out.str();
}

Presentation parse_presentation_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what(), 1);
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("expected object with integer field 'n'", 1);
  long long nv = j["n"].get<long long>();
  if (nv < 1 || nv > static_cast<long long>(kMaxGenerators))
    throw ParseError("generator count out of range", 1);
  Presentation p(static_cast<std::uint32_t>(nv));
  if (j.contains("relators")) {
    if (!j["relators"].is_array()) throw ParseError("'relators' must be an array", 1);
    for (const auto& row : j["relators"]) {
      if (!row.is_array() || row.size() != 3)
        throw ParseError("each relator must be a three-element array", 1);
      std::array<LetterId, 3> w{};
      for (int i = 0; i < 3; ++i) {
        if (!row[i].is_string()) throw ParseError("letters must be strings", 1);
        auto l = parse_letter(row[i].get<std::string>(), p.n);
        if (!l) throw ParseError("bad letter token '" + row[i].get<std::string>() + "'", 1);
        w[i] = *l;
      }
      RelatorError e = validate_relator(w[0], w[1], w[2], p.n);
      if (e != RelatorError::Ok) throw ParseError(relator_error_message(e), 1);
      p.add(Relator{w});
    }
  }
  return p;
}

std::string serialize_presentation_json(const Presentation& p) {
  nlohmann::json j;
  j["format"] = "rtg-presentation";
  j["version"] = 1;
  j["n"] = p.n;
  auto rows = nlohmann::json::array();
  for (const Relator& r : p.relators) {
    rows.push_back({letter_name(r.letters[0]), letter_name(r.letters[1]),
                    letter_name(r.letters[2])});
  }
  j["relators"] = rows;
  return j.dump(2) + "\n";
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_presentation_json(text);
  return parse_presentation_text(text);
}

void save_presentation_file(const Presentation& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  out << (json ? serialize_presentation_json(p) : serialize_presentation_text(p));
}

}  // namespace rtg
