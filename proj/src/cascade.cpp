#include "rtg/cascade.hpp"

#include <deque>
#include <unordered_map>

namespace rtg {

namespace {

inline std::uint32_t inv_elem(std::uint32_t x, std::uint32_t e) {
  return x == e ? e : (x ^ 1u);
}

inline void six_forms(const Relator& r, Relator out[6]) {
  out[0] = r;
  out[1] = out[0].rotated();
  out[2] = out[1].rotated();
  out[3] = r.inverted();
  out[4] = out[3].rotated();
  out[5] = out[4].rotated();
}

struct Worker {
  DeductionState& s;
  std::uint32_t e;
  std::deque<CascadeStep> pending;

  void push(CascadeRule rule, std::int32_t ra, std::int32_t rb, std::uint32_t x,
            std::uint32_t y) {
    pending.push_back({rule, ra, rb, x, y});
  }

  bool drain() {
    bool changed = false;
    while (!pending.empty()) {
      CascadeStep st = pending.front();
      pending.pop_front();
      if (!s.classes.unite(st.x, st.y)) continue;
      s.log.push_back(st);
      changed = true;
      push(CascadeRule::Involution, st.rel_a, st.rel_b, inv_elem(st.x, e),
           inv_elem(st.y, e));
    }
    return changed;
  }
};

}  // namespace

DeductionState cascade_close(const Presentation& p,
                             const std::vector<LetterId>& killed) {
  DeductionState s(p.n);
  const std::uint32_t e = s.identity();
  Worker w{s, e, {}};

  for (LetterId z : killed) {
    w.push(CascadeRule::Seed, -1, -1, z, e);
    w.push(CascadeRule::Seed, -1, -1, inverse(z), e);
  }
  w.drain();

  bool changed = true;
  while (changed) {
    ++s.passes;
    // key (class, class) of a form's first two letters -> (third letter, relator)
    std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::int32_t>> prefix;
    prefix.reserve(p.relators.size() * 6);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      Relator forms[6];
      six_forms(p.relators[i], forms);
      for (const Relator& f : forms) {
        const LetterId a = f.letters[0], b = f.letters[1], c = f.letters[2];
        std::uint32_t ca = s.classes.find(a), cb = s.classes.find(b);
        if (s.classes.same(a, e)) {
          w.push(CascadeRule::IdentityLetter, static_cast<std::int32_t>(i), -1, b,
                 inverse(c));
        }
        if (ca == s.classes.find(inverse(b))) {
          w.push(CascadeRule::InversePair, static_cast<std::int32_t>(i), -1, c, e);
        }
        std::uint64_t key = (static_cast<std::uint64_t>(ca) << 32) | cb;
        auto [it, inserted] = prefix.try_emplace(key, c, static_cast<std::int32_t>(i));
        if (!inserted && !s.classes.same(it->second.first, c)) {
          w.push(CascadeRule::PairMatch, it->second.second,
                 static_cast<std::int32_t>(i), it->second.first, c);
        }
      }
    }
    changed = w.drain();
  }
  return s;
}

bool involution_closed(DeductionState& s) {
  const std::uint32_t e = s.identity();
  for (std::uint32_t x = 0; x < 2 * s.n; ++x) {
    if (s.classes.same(x, e) != s.classes.same(inverse(x), e)) return false;
    for (std::uint32_t y = x + 1; y < 2 * s.n; ++y)
      if (s.classes.same(x, y) != s.classes.same(inverse(x), inverse(y))) return false;
  }
  return true;
}

bool validate_cascade_log(const Presentation& p,
                          const std::vector<LetterId>& killed,
                          DeductionState& s) {
  DeductionState r(p.n);
  const std::uint32_t e = r.identity();
  auto is_killed = [&](std::uint32_t x) {
    for (LetterId z : killed)
      if (x == z || x == inverse(z)) return true;
    return false;
  };

  for (const CascadeStep& st : s.log) {
    bool justified = false;
    switch (st.rule) {
      case CascadeRule::Seed:
        justified = st.y == e && is_killed(st.x);
        break;
      case CascadeRule::Involution: {
        std::uint32_t ix = inv_elem(st.x, e), iy = inv_elem(st.y, e);
        justified = r.classes.same(ix, iy);
        break;
      }
      case CascadeRule::InversePair: {
        if (st.rel_a < 0 || st.y != e) break;
        Relator forms[6];
        six_forms(p.relators[st.rel_a], forms);
        for (const Relator& f : forms)
          if (f.letters[2] == st.x &&
              r.classes.same(f.letters[0], inverse(f.letters[1])))
            justified = true;
        break;
      }
      case CascadeRule::IdentityLetter: {
        if (st.rel_a < 0) break;
        Relator forms[6];
        six_forms(p.relators[st.rel_a], forms);
        for (const Relator& f : forms)
          if (r.classes.same(f.letters[0], e) &&
              ((f.letters[1] == st.x && inverse(f.letters[2]) == st.y) ||
               (f.letters[1] == st.y && inverse(f.letters[2]) == st.x)))
            justified = true;
        break;
      }
      case CascadeRule::PairMatch: {
        if (st.rel_a < 0 || st.rel_b < 0) break;
        Relator fa[6], fb[6];
        six_forms(p.relators[st.rel_a], fa);
        six_forms(p.relators[st.rel_b], fb);
        for (const Relator& u : fa)
          for (const Relator& v : fb) {
            bool thirds = (u.letters[2] == st.x && v.letters[2] == st.y) ||
                          (u.letters[2] == st.y && v.letters[2] == st.x);
            if (thirds && r.classes.same(u.letters[0], v.letters[0]) &&
                r.classes.same(u.letters[1], v.letters[1]))
              justified = true;
          }
        break;
      }
    }
    if (!justified) return false;
    r.classes.unite(st.x, st.y);
  }

  // The replayed partition must coincide with the cascade's result.
  for (std::uint32_t x = 0; x <= 2 * p.n; ++x)
    for (std::uint32_t y = x + 1; y <= 2 * p.n; ++y)
      if (r.classes.same(x, y) != s.classes.same(x, y)) return false;
  return true;
}

}  // namespace rtg
