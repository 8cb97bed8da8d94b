#include "tables.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <set>
#include <thread>

#include "cyclok2/arith/primes.hpp"
#include "cyclok2/cyclo/decompose.hpp"
#include "cyclok2/genus/genus.hpp"
#include "cyclok2/k2tame/counting.hpp"
#include "json.hpp"

namespace cyclok2::cli {

namespace {

std::uint64_t parse_number(std::string_view s, const std::string& whole) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw RangeError("invalid range '" + whole + "'");
  }
  return v;
}

// Rows computed on `jobs` threads; row i always lands in slot i.
std::vector<std::vector<std::string>> compute_rows(std::size_t count, unsigned jobs,
                                                   const std::function<std::vector<std::string>(std::size_t)>& row) {
  std::vector<std::vector<std::string>> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = row(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::string yesno(bool b) { return b ? "true" : "false"; }

// Residues +-p^(2m) in [2, l-2], straight from the definition.
std::set<std::uint64_t> zset_oracle(std::uint64_t l, std::uint64_t p) {
  std::set<std::uint64_t> s;
  const std::uint64_t p2 = p % l * (p % l) % l;
  std::uint64_t q = 1;
  for (std::uint64_t m = 0; m < l; ++m, q = q * p2 % l) {
    for (std::uint64_t t : {q, (l - q) % l}) {
      if (t >= 2 && t + 2 <= l) s.insert(t);
    }
  }
  return s;
}

void require(const std::vector<std::uint64_t>& v, const char* flag, const std::string& kind) {
  if (v.empty()) throw std::invalid_argument("table " + kind + " needs " + flag);
}

Table zset_table(const TableRequest& req) {
  require(req.l, "--l", "zset");
  require(req.p, "--p", "zset");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> tuples;
  for (auto l : req.l) {
    if (l < 5 || !arith::is_prime(l)) continue;
    for (auto p : req.p) {
      if (arith::is_prime(p) && p != l) tuples.emplace_back(l, p);
    }
  }
  Table t;
  t.columns = {"l", "p", "zset", "size", "full", "predicate", "phi_l_irreducible", "agree"};
  t.rows = compute_rows(tuples.size(), req.jobs, [&](std::size_t i) {
    const auto [l, p] = tuples[i];
    const auto li = static_cast<int>(l);
    const auto z = zset_oracle(l, p);
    std::string members;
    for (auto v : z) members += (members.empty() ? "" : " ") + std::to_string(v);
    const bool full = z.size() == l - 3;
    const bool pred = k2tame::lemma_514_predicate(li, p);
    return std::vector<std::string>{std::to_string(l),      std::to_string(p),  members,
                                    std::to_string(z.size()), yesno(full),       yesno(pred),
                                    yesno(cyclo::cyclotomic_irreducible_mod(li, p)), yesno(full == pred)};
  });
  for (const auto& r : t.rows) t.mismatches += r.back() == "false";
  return t;
}

Table counts_table(const TableRequest& req) {
  require(req.l, "--l", "counts");
  require(req.p, "--p", "counts");
  require(req.n, "--n", "counts");
  struct Tuple {
    std::uint64_t l, p, n;
  };
  std::vector<Tuple> tuples;
  for (auto l : req.l) {
    if (l < 5 || !arith::is_prime(l)) continue;
    for (auto p : req.p) {
      if (p != 0 && (!arith::is_prime(p) || p == l)) continue;
      for (auto n : req.n) {
        if (n >= 1 && n <= (l - 3) / 2) tuples.push_back({l, p, n});
      }
    }
  }
  Table t;
  t.columns = {"l", "p", "n", "c", "cs", "predicted_c", "predicted_cs", "match"};
  t.rows = compute_rows(tuples.size(), req.jobs, [&](std::size_t i) {
    const auto [l, p, n] = tuples[i];
    const auto li = static_cast<int>(l);
    std::vector<std::string> row{std::to_string(l), std::to_string(p), std::to_string(n)};
    if (p != 0 && !cyclo::cyclotomic_irreducible_mod(li, p)) {
      row.insert(row.end(), {"", "", "", "", "n/a"});
      return row;
    }
    // Computed side: powers c_l(x)^t that are cyclotomic, one generator at a time.
    long per = 0;
    for (int s = 1; s < li; ++s) per += k2tame::power_classification(li, p, s).cyclotomic ? 1 : 0;
    const long N = static_cast<long>(n);
    const long c = N * per, cs = per == li - 1 ? N : 0;
    long pc = 2 * N, pcs = 0;
    if (p != 0) {
      pc = N * (2 + static_cast<long>(zset_oracle(l, p).size()));
      pcs = k2tame::lemma_514_predicate(li, p) ? N : 0;
    }
    row.insert(row.end(), {std::to_string(c), std::to_string(cs), std::to_string(pc), std::to_string(pcs),
                           yesno(c == pc && cs == pcs)});
    return row;
  });
  for (const auto& r : t.rows) t.mismatches += r.back() == "false";
  return t;
}

Table genus_table(const TableRequest& req) {
  require(req.p, "--p", "genus");
  require(req.n, "--n", "genus");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> tuples;
  for (auto p : req.p) {
    if (!arith::is_prime(p)) continue;
    for (auto n : req.n) {
      if (n >= 3) tuples.emplace_back(n, p);
    }
  }
  const std::set<std::uint64_t> e2{3, 4, 5, 6, 8, 10, 12}, e3{3, 4, 6};
  Table t;
  t.columns = {"n", "p", "genus", "lhs", "rhs", "finite", "predicted_exception", "match"};
  t.rows = compute_rows(tuples.size(), req.jobs, [&](std::size_t i) {
    const auto [n, p] = tuples[i];
    const auto f = genus::finiteness_classifier(n, p);
    const bool exc = (p == 2 && e2.count(n)) || (p == 3 && e3.count(n));
    return std::vector<std::string>{std::to_string(n),     std::to_string(p),     std::to_string(f.genus),
                                    std::to_string(f.lhs), std::to_string(f.rhs), yesno(f.finite()),
                                    yesno(exc),            yesno(f.finite() != exc && f.finite() == (f.genus >= 2))};
  });
  for (const auto& r : t.rows) t.mismatches += r.back() == "false";
  return t;
}

}  // namespace

std::vector<std::uint64_t> parse_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string_view rest = text;
  if (rest.empty()) throw RangeError("empty range");
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view part = rest.substr(0, comma);
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_number(part, text));
    } else {
      const auto a = parse_number(part.substr(0, dots), text), b = parse_number(part.substr(dots + 2), text);
      if (a > b) throw RangeError("empty range '" + text + "'");
      if (b - a > 1'000'000) throw RangeError("range too long '" + text + "'");
      for (auto v = a; v <= b; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Table make_table(const TableRequest& req) {
  if (req.kind == "zset") return zset_table(req);
  if (req.kind == "counts") return counts_table(req);
  if (req.kind == "genus") return genus_table(req);
  throw std::invalid_argument("unknown table kind '" + req.kind + "'");
}

void render(std::ostream& out, const Table& t, Format fmt) {
  if (fmt == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json o;
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        const std::string& v = r[i];
        if (v == "true" || v == "false") {
          o[t.columns[i]] = v == "true";
        } else if (!v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          o[t.columns[i]] = std::stoull(v);
        } else {
          o[t.columns[i]] = v;
        }
      }
      arr.push_back(std::move(o));
    }
    out << arr.dump(2) << "\n";
    return;
  }
  const char sep = fmt == Format::Csv ? ',' : ' ';
  std::vector<std::size_t> width(t.columns.size());
  if (fmt == Format::Text) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      width[i] = t.columns[i].size();
      for (const auto& r : t.rows) width[i] = std::max(width[i], r[i].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << sep;
      out << cells[i];
      if (fmt == Format::Text && i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
    }
    out << "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
}

}  // namespace cyclok2::cli
