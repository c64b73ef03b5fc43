#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orchard/drawing.hpp"

namespace orchard {

// Exact binomial coefficient; intermediate products stay exact because each
// prefix is itself a binomial coefficient.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Crossing number of the optimal K_{n,n} drawing: 4n * C(n,3). Attained by
// 2n points in convex position with alternating colors.
inline std::int64_t formula_ocn_knn(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("formula_ocn_knn: n >= 1 required");
  if (n > 50000) throw OverflowError("formula_ocn_knn: value exceeds 64 bits");
  return 4 * n * binomial(n, 3);
}

enum class LineClass : std::uint8_t { bw, white_white, black_black };

inline const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::bw: return "bw";
    case LineClass::white_white: return "white_white";
    default: return "black_black";
  }
}

// One spanning line of a balanced complete bipartite drawing, with the raw
// census of its two open halfplanes and the folded type the counting
// machinery bins it by. "left" is the positive orientation side of
// (point[u], point[v]); the two spanning points are counted nowhere.
struct LineRecord {
  std::size_t u = 0;
  std::size_t v = 0;
  LineClass line_class = LineClass::bw;
  std::int64_t black_left = 0;
  std::int64_t white_left = 0;
  std::int64_t black_right = 0;
  std::int64_t white_right = 0;
  // bw lines: the two endpoint types (per-color halfplane minimum), sorted
  // ascending. Same-color lines: i is the own-color halfplane minimum and j
  // the other-color count on the minimizing side, ties broken toward the
  // smaller j.
  std::int64_t type_i = 0;
  std::int64_t type_j = 0;
  // Always black_left*white_right + white_left*black_right, from raw counts.
  std::int64_t separated_bw_pairs = 0;
};

namespace detail {

inline std::size_t require_balanced_bipartite(const ColoredDrawing& d, const char* who) {
  if (!d.is_balanced_complete_bipartite()) {
    throw InvalidDrawingError(std::string(who) +
                              ": balanced complete bipartite drawing required");
  }
  return d.count(Color::black);
}

struct SideCensus {
  std::int64_t black_left = 0;
  std::int64_t white_left = 0;
  std::int64_t black_right = 0;
  std::int64_t white_right = 0;
};

inline SideCensus line_census(const ColoredDrawing& d, std::size_t u, std::size_t v) {
  SideCensus s;
  const Configuration& cfg = d.config();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i == u || i == v) continue;
    const int o = orientation(cfg[u], cfg[v], cfg[i]);
    if (o > 0) {
      (d.color(i) == Color::black ? s.black_left : s.white_left) += 1;
    } else {
      (d.color(i) == Color::black ? s.black_right : s.white_right) += 1;
    }
  }
  return s;
}

}  // namespace detail

// Classifies every spanning line of a balanced K_{n,n} drawing: C(2n,2)
// records in lexicographic (u,v) order, partitioned into n^2 bw lines and
// C(n,2) lines per color class.
inline std::vector<LineRecord> classify_lines(const ColoredDrawing& d) {
  detail::require_balanced_bipartite(d, "classify_lines");
  std::vector<LineRecord> records;
  const std::size_t m = d.size();
  records.reserve(m * (m - 1) / 2);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      const auto s = detail::line_census(d, u, v);
      LineRecord rec;
      rec.u = u;
      rec.v = v;
      rec.black_left = s.black_left;
      rec.white_left = s.white_left;
      rec.black_right = s.black_right;
      rec.white_right = s.white_right;
      rec.separated_bw_pairs =
          s.black_left * s.white_right + s.white_left * s.black_right;
      if (d.color(u) != d.color(v)) {
        rec.line_class = LineClass::bw;
        const std::int64_t black_type = std::min(s.black_left, s.black_right);
        const std::int64_t white_type = std::min(s.white_left, s.white_right);
        rec.type_i = std::min(black_type, white_type);
        rec.type_j = std::max(black_type, white_type);
      } else if (d.color(u) == Color::white) {
        rec.line_class = LineClass::white_white;
        if (s.white_left < s.white_right) {
          rec.type_i = s.white_left;
          rec.type_j = s.black_left;
        } else if (s.white_right < s.white_left) {
          rec.type_i = s.white_right;
          rec.type_j = s.black_right;
        } else {
          rec.type_i = s.white_left;
          rec.type_j = std::min(s.black_left, s.black_right);
        }
      } else {
        rec.line_class = LineClass::black_black;
        if (s.black_left < s.black_right) {
          rec.type_i = s.black_left;
          rec.type_j = s.white_left;
        } else if (s.black_right < s.black_left) {
          rec.type_i = s.black_right;
          rec.type_j = s.white_right;
        } else {
          rec.type_i = s.black_left;
          rec.type_j = std::min(s.white_left, s.white_right);
        }
      }
      records.push_back(rec);
    }
  }
  return records;
}

// Crossing number split by spanning-line class: a sums separated bw pairs
// over bw lines, b over white-white lines, c over black-black lines. Since
// the edges of K_{n,n} are exactly the bw pairs, a + b + c retotals the
// crossing number, which is asserted here against the direct edge sum.
struct Decomposition {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t total = 0;
  std::vector<LineRecord> lines;
};

inline Decomposition abc_decomposition(const ColoredDrawing& d) {
  Decomposition out;
  out.lines = classify_lines(d);
  for (const LineRecord& rec : out.lines) {
    switch (rec.line_class) {
      case LineClass::bw: out.a += rec.separated_bw_pairs; break;
      case LineClass::white_white: out.b += rec.separated_bw_pairs; break;
      case LineClass::black_black: out.c += rec.separated_bw_pairs; break;
    }
  }
  out.total = out.a + out.b + out.c;
  if (out.total != crossing_number(d)) {
    throw std::logic_error("abc_decomposition: line totals disagree with the edge sum");
  }
  return out;
}

// Caps for the folded endpoint types: a bw line leaves n-1 same-colored
// points off the line, a same-color line n-2, so the halfplane minimum is at
// most floor((n-1)/2) resp. floor((n-2)/2).
inline std::int64_t bw_type_cap(std::size_t n) {
  return static_cast<std::int64_t>((n - 1) / 2);
}

inline std::int64_t same_color_type_cap(std::size_t n) {
  return n < 2 ? 0 : static_cast<std::int64_t>((n - 2) / 2);
}

// Aggregated line-type counts for one class.
//
// y[i] counts line-endpoint incidences of type i: a bw edge contributes its
// black endpoint's type and its white endpoint's type; a same-color line
// contributes its type twice, once per endpoint. So y sums to 2n^2 for the
// bw class and 2*C(n,2) per color class.
//
// x bins lines. bw: x[i][j] with i <= j counts edges whose sorted endpoint
// type pair is (i, j); the lower triangle stays zero. Same-color: x[i][j]
// counts endpoint incidences (two per line) with own-color type i and
// other-color count j on the type side, j running over the full census range
// 0..n. On convex drawings every same-color line has j = i + 1; arbitrary
// drawings spread over other columns, so the row sum, not a fixed window, is
// what reconciles with y.
struct TypeTables {
  LineClass line_class = LineClass::bw;
  std::size_t n = 0;
  std::int64_t cap = 0;
  std::vector<std::int64_t> y;
  std::vector<std::vector<std::int64_t>> x;
};

inline TypeTables type_tables(const std::vector<LineRecord>& records, std::size_t n,
                              LineClass cls) {
  TypeTables t;
  t.line_class = cls;
  t.n = n;
  t.cap = cls == LineClass::bw ? bw_type_cap(n) : same_color_type_cap(n);
  t.y.assign(static_cast<std::size_t>(t.cap) + 1, 0);
  const std::size_t cols = cls == LineClass::bw ? static_cast<std::size_t>(t.cap) + 1
                                                : n + 1;
  t.x.assign(static_cast<std::size_t>(t.cap) + 1,
             std::vector<std::int64_t>(cols, 0));
  for (const LineRecord& rec : records) {
    if (rec.line_class != cls) continue;
    const auto i = static_cast<std::size_t>(rec.type_i);
    const auto j = static_cast<std::size_t>(rec.type_j);
    if (cls == LineClass::bw) {
      t.y[i] += 1;
      t.y[j] += 1;
      t.x[i][j] += 1;
    } else {
      t.y[i] += 2;
      t.x[i][j] += 2;
    }
  }
  return t;
}

inline TypeTables type_tables(const ColoredDrawing& d, LineClass cls) {
  const std::size_t n = detail::require_balanced_bipartite(d, "type_tables");
  return type_tables(classify_lines(d), n, cls);
}

// Distinct sorted per-vertex type sequences. For the bw class each vertex
// lists, over its n incident edges, the smaller halfplane count of the
// opposite color; for a color class each vertex of that color lists, over
// its n-1 lines to same-colored vertices, the smaller halfplane count of
// its own color. In both cases the counted points are exactly the points
// whose directions the line sweeps through, so consecutive entries around
// a vertex change by at most one.
struct ProfileEntry {
  std::size_t t = 0;                       // 1-based, first-occurrence order
  std::int64_t s = 0;                      // minimum entry of the sequence
  std::vector<std::int64_t> sorted_sequence;
  std::vector<std::size_t> vertices;       // drawing indices with this sequence
  std::vector<std::int64_t> multiplicity;  // multiplicity[i] = count of type i
};

struct ProfileTables {
  LineClass line_class = LineClass::bw;
  std::size_t n = 0;
  std::int64_t cap = 0;
  std::size_t vertex_total = 0;  // 2n for bw, n per color class
  std::vector<ProfileEntry> entries;
};

// Registers sorted sequences in first-occurrence order over a deterministic
// vertex scan. Exposed separately so the registry arithmetic is testable on
// hand-picked sequences.
inline ProfileTables build_profiles(LineClass cls, std::size_t n, std::int64_t cap,
                                    const std::vector<std::size_t>& vertex_ids,
                                    std::vector<std::vector<std::int64_t>> sequences) {
  if (vertex_ids.size() != sequences.size()) {
    throw std::invalid_argument("build_profiles: one sequence per vertex required");
  }
  ProfileTables p;
  p.line_class = cls;
  p.n = n;
  p.cap = cap;
  p.vertex_total = vertex_ids.size();
  std::map<std::vector<std::int64_t>, std::size_t> registry;
  for (std::size_t k = 0; k < sequences.size(); ++k) {
    auto& seq = sequences[k];
    std::sort(seq.begin(), seq.end());
    for (std::int64_t v : seq) {
      if (v < 0 || v > cap) {
        throw std::out_of_range("build_profiles: sequence entry outside [0, cap]");
      }
    }
    auto [it, inserted] = registry.try_emplace(seq, p.entries.size());
    if (inserted) {
      ProfileEntry e;
      e.t = p.entries.size() + 1;
      e.s = seq.empty() ? 0 : seq.front();
      e.sorted_sequence = seq;
      e.multiplicity.assign(static_cast<std::size_t>(cap) + 1, 0);
      for (std::int64_t v : seq) e.multiplicity[static_cast<std::size_t>(v)] += 1;
      p.entries.push_back(std::move(e));
    }
    p.entries[it->second].vertices.push_back(vertex_ids[k]);
  }
  return p;
}

inline ProfileTables vertex_profiles(const ColoredDrawing& d, LineClass cls) {
  const std::size_t n = detail::require_balanced_bipartite(d, "vertex_profiles");
  std::vector<std::size_t> vertex_ids;
  std::vector<std::vector<std::int64_t>> sequences;
  const std::size_t m = d.size();
  if (cls == LineClass::bw) {
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<std::int64_t> seq;
      seq.reserve(n);
      for (std::size_t b = 0; b < m; ++b) {
        if (d.color(b) == d.color(a)) continue;
        const auto s = detail::line_census(d, std::min(a, b), std::max(a, b));
        seq.push_back(d.color(a) == Color::black
                          ? std::min(s.white_left, s.white_right)
                          : std::min(s.black_left, s.black_right));
      }
      vertex_ids.push_back(a);
      sequences.push_back(std::move(seq));
    }
    return build_profiles(cls, n, bw_type_cap(n), vertex_ids, std::move(sequences));
  }
  const Color own = cls == LineClass::white_white ? Color::white : Color::black;
  for (std::size_t a = 0; a < m; ++a) {
    if (d.color(a) != own) continue;
    std::vector<std::int64_t> seq;
    seq.reserve(n - 1);
    for (std::size_t b = 0; b < m; ++b) {
      if (b == a || d.color(b) != own) continue;
      const auto s = detail::line_census(d, std::min(a, b), std::max(a, b));
      seq.push_back(own == Color::black ? std::min(s.black_left, s.black_right)
                                        : std::min(s.white_left, s.white_right));
    }
    vertex_ids.push_back(a);
    sequences.push_back(std::move(seq));
  }
  return build_profiles(cls, n, same_color_type_cap(n), vertex_ids, std::move(sequences));
}

// Quadratic weight in the bw-line lower-bound accounting. Zero at s = 0 and
// nonnegative over 0 <= s <= floor((n-1)/2).
inline std::int64_t c_coefficient_bw(std::int64_t s, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("c_coefficient_bw: n >= 1 required");
  const std::int64_t cap = (n - 1) / 2;
  if (s < 0 || s > cap) {
    throw std::out_of_range("c_coefficient_bw: s outside [0, floor((n-1)/2)]");
  }
  std::int64_t tail = 0;
  for (std::int64_t i = 1; i < s; ++i) tail += i * (n - i - 1);
  return s * (n - s - 1) * (n - 2 * (cap - s + 1)) - 2 * tail;
}

// The same-color accounting admits two caps for the type index. The endpoint
// cap floor((n-2)/2) is the range same-color types actually take, and the
// coefficient is nonnegative over it. The relaxed cap floor((n-1)/2) admits
// one more value of s for odd n, where the coefficient goes negative
// (s=1, n=5 gives -6), so `endpoint` is the default.
enum class SameColorCap : std::uint8_t { endpoint, relaxed };

inline std::int64_t c_coefficient_same(std::int64_t s, std::int64_t n,
                                       SameColorCap cap_kind = SameColorCap::endpoint) {
  if (n < 2) throw std::invalid_argument("c_coefficient_same: n >= 2 required");
  const std::int64_t cap = cap_kind == SameColorCap::endpoint ? (n - 2) / 2 : (n - 1) / 2;
  if (s < 1 || s > cap) {
    throw std::out_of_range("c_coefficient_same: s outside [1, cap]");
  }
  const auto weight = [n](std::int64_t k) { return n * (1 + 2 * k) - 2 * (k + 1) * (k + 1); };
  std::int64_t head = 0;
  for (std::int64_t i = 1; i < s; ++i) head += weight(i);
  return weight(s) * ((n - 1) - 2 * (cap - s + 1)) - 2 * head - 2 * (n - 2);
}

enum class CheckStatus : std::uint8_t { pass, fail, vacuous };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "vacuous";
  }
}

// Two severities. An identity is bookkeeping that holds for every generic
// drawing; its failure means the implementation is broken. A bound is a
// geometric inequality that is attained with equality on the alternating
// convex drawings and holds on many drawings, but not on all of them; its
// failure is a reportable property of the drawing, not an error. The
// per-class floors b and c in particular admit counterexamples (skewed
// clusterings push a color class below its convex value while the bw class
// absorbs the difference), so callers must not treat bound failures as
// bugs.
enum class CheckKind : std::uint8_t { identity, bound };

inline const char* to_string(CheckKind k) {
  return k == CheckKind::identity ? "identity" : "bound";
}

struct IdentityCheck {
  std::string name;
  CheckKind kind = CheckKind::identity;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> witnesses;
};

struct IdentityReport {
  std::size_t n = 0;
  std::vector<IdentityCheck> checks;

  bool identities_passed() const {
    for (const auto& c : checks) {
      if (c.kind == CheckKind::identity && c.status == CheckStatus::fail) return false;
    }
    return true;
  }

  bool bounds_satisfied() const {
    for (const auto& c : checks) {
      if (c.kind == CheckKind::bound && c.status == CheckStatus::fail) return false;
    }
    return true;
  }

  bool all_passed() const { return identities_passed() && bounds_satisfied(); }
};

namespace detail {

inline const char* suffix_of(LineClass cls) {
  switch (cls) {
    case LineClass::bw: return "bw";
    case LineClass::white_white: return "white_white";
    default: return "black_black";
  }
}

}  // namespace detail

// Runs the counting identities and the geometric bound checks against one
// drawing. Identity failures indicate an implementation bug. Bound failures
// are properties of the drawing: the multiplicity bounds follow from a
// sweep argument and are expected to hold on every generic drawing, while
// the per-class floors only certify equality-at-convex behavior and are
// violated by a sizable fraction of random drawings. For n = 1 the profile
// machinery has nothing to say, so every check reports vacuous instead of
// trivially passing.
inline IdentityReport check_identities(const ColoredDrawing& d) {
  const std::size_t n = detail::require_balanced_bipartite(d, "check_identities");
  IdentityReport report;
  report.n = n;
  static const LineClass kClasses[3] = {LineClass::bw, LineClass::white_white,
                                        LineClass::black_black};
  const auto add = [&report](const std::string& name, CheckKind kind, CheckStatus status,
                             std::vector<std::string> witnesses = {}) {
    report.checks.push_back({name, kind, status, std::move(witnesses)});
  };

  if (n < 2) {
    for (LineClass cls : kClasses) {
      const std::string sfx = detail::suffix_of(cls);
      for (const char* base : {"y_total_", "type_table_", "profile_total_",
                               "profile_types_", "sequence_length_"}) {
        add(base + sfx, CheckKind::identity, CheckStatus::vacuous);
      }
      add("multiplicity_bounds_" + sfx, CheckKind::bound, CheckStatus::vacuous);
    }
    add("decomposition_total", CheckKind::identity, CheckStatus::vacuous);
    for (const char* name : {"floor_bw", "floor_white_white", "floor_black_black",
                             "floor_total"}) {
      add(name, CheckKind::bound, CheckStatus::vacuous);
    }
    return report;
  }

  const auto records = classify_lines(d);
  const Decomposition dec = abc_decomposition(d);
  for (LineClass cls : kClasses) {
    const std::string sfx = detail::suffix_of(cls);
    const TypeTables tables = type_tables(records, n, cls);
    const ProfileTables profiles = vertex_profiles(d, cls);
    const bool is_bw = cls == LineClass::bw;
    const std::int64_t nn = static_cast<std::int64_t>(n);

    std::vector<std::string> wit;
    std::int64_t y_sum = 0;
    for (std::int64_t y : tables.y) y_sum += y;
    const std::int64_t y_expected = is_bw ? 2 * nn * nn : 2 * binomial(nn, 2);
    if (y_sum != y_expected) {
      wit.push_back("sum(y) = " + std::to_string(y_sum) + ", expected " +
                    std::to_string(y_expected));
    }
    add("y_total_" + sfx, CheckKind::identity,
        wit.empty() ? CheckStatus::pass : CheckStatus::fail, wit);

    wit.clear();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(tables.cap); ++i) {
      std::int64_t rhs = 0;
      if (is_bw) {
        rhs = 2 * tables.x[i][i];
        for (std::size_t j = 0; j < i; ++j) rhs += tables.x[j][i];
        for (std::size_t j = i + 1; j <= static_cast<std::size_t>(tables.cap); ++j) {
          rhs += tables.x[i][j];
        }
      } else {
        for (std::int64_t v : tables.x[i]) rhs += v;
      }
      if (rhs != tables.y[i]) {
        wit.push_back("y[" + std::to_string(i) + "] = " + std::to_string(tables.y[i]) +
                      " but x row gives " + std::to_string(rhs));
      }
    }
    add("type_table_" + sfx, CheckKind::identity,
        wit.empty() ? CheckStatus::pass : CheckStatus::fail, wit);

    wit.clear();
    std::size_t p_sum = 0;
    for (const auto& e : profiles.entries) p_sum += e.vertices.size();
    const std::size_t p_expected = is_bw ? 2 * n : n;
    if (p_sum != p_expected) {
      wit.push_back("sum(p) = " + std::to_string(p_sum) + ", expected " +
                    std::to_string(p_expected));
    }
    add("profile_total_" + sfx, CheckKind::identity,
        wit.empty() ? CheckStatus::pass : CheckStatus::fail, wit);

    wit.clear();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(tables.cap); ++i) {
      std::int64_t rhs = 0;
      for (const auto& e : profiles.entries) {
        rhs += e.multiplicity[i] * static_cast<std::int64_t>(e.vertices.size());
      }
      if (rhs != tables.y[i]) {
        wit.push_back("y[" + std::to_string(i) + "] = " + std::to_string(tables.y[i]) +
                      " but profiles give " + std::to_string(rhs));
      }
    }
    add("profile_types_" + sfx, CheckKind::identity,
        wit.empty() ? CheckStatus::pass : CheckStatus::fail, wit);

    wit.clear();
    const std::int64_t expected_len = is_bw ? nn : nn - 1;
    for (const auto& e : profiles.entries) {
      std::int64_t len = 0;
      for (std::int64_t mult : e.multiplicity) len += mult;
      if (len != expected_len) {
        wit.push_back("sequence t=" + std::to_string(e.t) + " has length " +
                      std::to_string(len) + ", expected " + std::to_string(expected_len));
      }
    }
    add("sequence_length_" + sfx, CheckKind::identity,
        wit.empty() ? CheckStatus::pass : CheckStatus::fail, wit);

    // Every type above the sequence minimum appears at least twice, except
    // the cap itself, which one parity only reaches once: odd n for bw
    // sequences (length n), even n for same-color sequences (length n-1).
    // A sweep of the line through a vertex meets the counted points one at
    // a time, so the sampled counts walk up to the cap and back down.
    wit.clear();
    const bool relax_at_cap = is_bw ? (n % 2 == 1) : (n % 2 == 0);
    for (const auto& e : profiles.entries) {
      for (std::int64_t i = e.s + 1; i <= tables.cap; ++i) {
        const std::int64_t need = (i == tables.cap && relax_at_cap) ? 1 : 2;
        const std::int64_t have = e.multiplicity[static_cast<std::size_t>(i)];
        if (have < need) {
          wit.push_back("sequence t=" + std::to_string(e.t) + " has multiplicity " +
                        std::to_string(have) + " at type " + std::to_string(i) +
                        ", needs " + std::to_string(need));
        }
      }
    }
    add("multiplicity_bounds_" + sfx, CheckKind::bound,
        wit.empty() ? CheckStatus::pass : CheckStatus::fail, wit);
  }

  std::vector<std::string> wit;
  const std::int64_t direct = crossing_number(d);
  if (dec.total != direct) {
    wit.push_back("a+b+c = " + std::to_string(dec.total) + " but edge sum = " +
                  std::to_string(direct));
  }
  add("decomposition_total", CheckKind::identity,
      wit.empty() ? CheckStatus::pass : CheckStatus::fail, wit);

  // Per-class floors, each reported on its own. All four are met with
  // equality or slack by the alternating convex drawings. The bw floor and
  // the total floor have held on every drawing we have generated; the two
  // same-color floors demonstrably fail on some drawings (for example five
  // blacks and five whites with the whites clustered far to one side), so a
  // floor violation here says something about the drawing, never about the
  // evaluator.
  const std::int64_t nn = static_cast<std::int64_t>(n);
  const std::int64_t base = nn * binomial(nn, 3);
  const auto floor_check = [&](const char* name, std::int64_t value,
                               std::int64_t floor, const char* label) {
    std::vector<std::string> w;
    if (value < floor) {
      w.push_back(std::string(label) + " = " + std::to_string(value) + " below " +
                  std::to_string(floor));
    }
    add(name, CheckKind::bound, w.empty() ? CheckStatus::pass : CheckStatus::fail, w);
  };
  floor_check("floor_bw", dec.a, 2 * base, "a");
  floor_check("floor_white_white", dec.b, base, "b");
  floor_check("floor_black_black", dec.c, base, "c");
  floor_check("floor_total", dec.total, 4 * base, "a+b+c");

  return report;
}

}  // namespace orchard
