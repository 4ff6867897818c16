#include "unichar/root_data.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace unichar {

std::string kind_name(RootKind k) {
  switch (k) {
    case RootKind::D4: return "D4";
    case RootKind::E6: return "E6";
    case RootKind::E8: return "E8";
  }
  throw MathError("bad kind");
}

RootKind kind_from_name(const std::string& s) {
  if (s == "D4" || s == "d4") return RootKind::D4;
  if (s == "E6" || s == "e6") return RootKind::E6;
  if (s == "E8" || s == "e8") return RootKind::E8;
  throw MathError("unknown root system kind '" + s + "'");
}

namespace {

struct RawRoot {
  int idx;
  const char* coeffs;  // digit string over the simple roots
};

// Positive roots, transcribed from the embedded tables. D4 keeps the two
// truncated roots (heights 4 and 5) because its relation list references
// them; the height bound of the working quotient stays 3.
const RawRoot kD4Roots[] = {
    {1, "1000"}, {2, "0100"}, {3, "0010"}, {4, "0001"},
    {5, "1010"}, {6, "0110"}, {7, "0011"},
    {8, "1110"}, {9, "1011"}, {10, "0111"},
    {11, "1111"},
    {12, "1121"},
};

const RawRoot kE6Roots[] = {
    {1, "100000"},  {2, "010000"},  {3, "001000"},
    {4, "000100"},  {5, "000010"},  {6, "000001"},
    {7, "101000"},  {8, "010100"},  {9, "001100"},
    {10, "000110"}, {11, "000011"},
    {12, "101100"}, {13, "011100"}, {14, "010110"},
    {15, "001110"}, {16, "000111"},
    {17, "111100"}, {18, "101110"}, {19, "011110"},
    {20, "010111"}, {21, "001111"},
};

const RawRoot kE8Roots[] = {
    {1, "10000000"},  {2, "01000000"},  {3, "00100000"},  {4, "00010000"},
    {5, "00001000"},  {6, "00000100"},  {7, "00000010"},  {8, "00000001"},
    {9, "10100000"},  {10, "01010000"}, {11, "00110000"}, {12, "00011000"},
    {13, "00001100"}, {14, "00000110"}, {15, "00000011"},
    {16, "10110000"}, {17, "01110000"}, {18, "01011000"}, {19, "00111000"},
    {20, "00011100"}, {21, "00001110"}, {22, "00000111"},
    {23, "11110000"}, {24, "10111000"}, {25, "01111000"}, {26, "01011100"},
    {27, "00111100"}, {28, "00011110"}, {29, "00001111"},
    {30, "11111000"}, {31, "10111100"}, {32, "01121000"}, {33, "01111100"},
    {34, "01011110"}, {35, "00111110"}, {36, "00011111"},
    {37, "11121000"}, {38, "11111100"}, {39, "10111110"}, {40, "01121100"},
    {41, "01111110"}, {42, "01011111"}, {43, "00111111"},
};

// Relation lists, in table order. All D4 coefficients are +1.
const CommEntry kD4Comm[] = {
    {1, 3, 5, 1},   {1, 6, 8, 1},
    {1, 7, 9, 1},   {1, 10, 11, 1},
    {2, 3, 6, 1},   {2, 5, 8, 1},
    {2, 7, 10, 1},  {2, 9, 11, 1},
    {3, 4, 7, 1},   {3, 11, 12, 1},
    {4, 5, 9, 1},   {4, 6, 10, 1},
    {4, 8, 11, 1},  {5, 10, 12, 1},
    {6, 9, 12, 1},  {7, 8, 12, 1},
};

const CommEntry kE6Comm[] = {
    {1, 3, 7, 1},    {2, 4, 8, 1},    {3, 4, 9, 1},
    {4, 5, 10, 1},   {5, 6, 11, 1},   {1, 9, 12, 1},
    {4, 7, 12, -1},  {2, 9, 13, 1},   {3, 8, 13, 1},
    {2, 10, 14, 1},  {5, 8, 14, -1},  {3, 10, 15, 1},
    {5, 9, 15, -1},  {4, 11, 16, 1},  {6, 10, 16, -1},
    {1, 13, 17, 1},  {7, 8, 17, 1},   {2, 12, 17, 1},
    {1, 15, 18, 1},  {7, 10, 18, 1},  {5, 12, 18, -1},
    {2, 15, 19, 1},  {3, 14, 19, 1},  {5, 13, 19, -1},
    {2, 16, 20, 1},  {8, 11, 20, 1},  {6, 14, 20, -1},
    {3, 16, 21, 1},  {9, 11, 21, 1},  {6, 15, 21, -1},
};

const CommEntry kE8Comm[] = {
    {1, 3, 9, 1},     {2, 4, 10, 1},    {3, 4, 11, 1},
    {4, 5, 12, 1},    {5, 6, 13, 1},    {6, 7, 14, 1},
    {7, 8, 15, 1},    {1, 11, 16, 1},   {4, 9, 16, -1},
    {2, 11, 17, 1},   {3, 10, 17, 1},   {2, 12, 18, 1},
    {5, 10, 18, -1},  {3, 12, 19, 1},   {5, 11, 19, -1},
    {4, 13, 20, 1},   {6, 12, 20, -1},  {5, 14, 21, 1},
    {7, 13, 21, -1},  {6, 15, 22, 1},   {8, 14, 22, -1},
    {1, 17, 23, 1},   {2, 16, 23, 1},   {9, 10, 23, 1},
    {1, 19, 24, 1},   {5, 16, 24, -1},  {9, 12, 24, 1},
    {2, 19, 25, 1},   {3, 18, 25, 1},   {5, 17, 25, -1},
    {2, 20, 26, 1},   {6, 18, 26, -1},  {10, 13, 26, 1},
    {3, 20, 27, 1},   {6, 19, 27, -1},  {11, 13, 27, 1},
    {4, 21, 28, 1},   {7, 20, 28, -1},  {12, 14, 28, 1},
    {5, 22, 29, 1},   {8, 21, 29, -1},  {13, 15, 29, 1},
    {1, 25, 30, 1},   {2, 24, 30, 1},   {5, 23, 30, -1},
    {9, 18, 30, 1},   {1, 27, 31, 1},   {6, 24, 31, -1},
    {9, 20, 31, 1},   {13, 16, 31, -1}, {4, 25, 32, 1},
    {10, 19, 32, -1}, {11, 18, 32, -1}, {12, 17, 32, -1},
    {2, 27, 33, 1},   {3, 26, 33, 1},   {6, 25, 33, -1},
    {13, 17, 33, -1}, {2, 28, 34, 1},   {7, 26, 34, -1},
    {10, 21, 34, 1},  {14, 18, 34, -1}, {3, 28, 35, 1},
    {7, 27, 35, -1},  {11, 21, 35, 1},  {14, 19, 35, -1},
    {4, 29, 36, 1},   {8, 28, 36, -1},  {12, 22, 36, 1},
    {15, 20, 36, -1}, {1, 32, 37, 1},   {4, 30, 37, 1},
    {10, 24, 37, -1}, {12, 23, 37, -1}, {16, 18, 37, -1},
    {1, 33, 38, 1},   {2, 31, 38, 1},   {6, 30, 38, -1},
    {9, 26, 38, 1},   {13, 23, 38, -1}, {1, 35, 39, 1},
    {7, 31, 39, -1},  {9, 28, 39, 1},   {14, 24, 39, -1},
    {16, 21, 39, 1},  {4, 33, 40, 1},   {6, 32, 40, -1},
    {10, 27, 40, -1}, {11, 26, 40, -1}, {17, 20, 40, 1},
    {2, 35, 41, 1},   {3, 34, 41, 1},   {7, 33, 41, -1},
    {14, 25, 41, -1}, {17, 21, 41, 1},  {2, 36, 42, 1},
    {8, 34, 42, -1},  {10, 29, 42, 1},  {15, 26, 42, -1},
    {18, 22, 42, 1},  {3, 36, 43, 1},   {8, 35, 43, -1},
    {11, 29, 43, 1},  {15, 27, 43, -1}, {19, 22, 43, 1},
};

struct KindData {
  int rank;
  int hmax;
  const RawRoot* roots;
  int nroots;
  const CommEntry* comm;
  int ncomm;
  const char* highest;
  const int* order;
  int norder;
};

// Normal-form orders: D4 swaps x_3 and x_4; E6/E8 put x_2 first.
const int kD4Order[] = {1, 2, 4, 3, 5, 6, 7, 8, 9, 10, 11, 12};
const int kE6Order[] = {2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
                        15, 16, 17, 18, 19, 20, 21};
const int kE8Order[] = {2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
                        16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28,
                        29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41,
                        42, 43};

KindData kind_data(RootKind k) {
  switch (k) {
    case RootKind::D4:
      return {4, 3, kD4Roots, 12, kD4Comm, 16, "1121", kD4Order, 12};
    case RootKind::E6:
      return {6, 4, kE6Roots, 21, kE6Comm, 30, "122321", kE6Order, 21};
    case RootKind::E8:
      return {8, 6, kE8Roots, 43, kE8Comm, 105, "23465432", kE8Order, 43};
  }
  throw MathError("bad kind");
}

std::array<std::int8_t, 8> parse_coeffs(const char* s, int rank) {
  std::array<std::int8_t, 8> c{};
  for (int i = 0; i < rank; ++i) c[i] = static_cast<std::int8_t>(s[i] - '0');
  return c;
}

}  // namespace

RootSystemTable RootSystemTable::load(RootKind kind) {
  KindData d = kind_data(kind);
  RootSystemTable t;
  t.kind_ = kind;
  t.rank_ = d.rank;
  t.hmax_ = d.hmax;
  t.roots_.resize(d.nroots);
  for (int i = 0; i < d.nroots; ++i) {
    if (d.roots[i].idx != i + 1) throw MathError("embedded table misindexed");
    RootEntry e;
    e.coeffs = parse_coeffs(d.roots[i].coeffs, d.rank);
    e.height = 0;
    for (int j = 0; j < d.rank; ++j) e.height += e.coeffs[j];
    t.roots_[i] = e;
  }
  t.entries_.assign(d.comm, d.comm + d.ncomm);
  t.order_.assign(d.order, d.order + d.norder);
  t.highest_ = parse_coeffs(d.highest, d.rank);
  t.index_positions();
  return t;
}

const RootSystemTable& RootSystemTable::get(RootKind kind) {
  static std::map<RootKind, RootSystemTable> cache;
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;

  RootSystemTable t;
  const char* dir = std::getenv("UNICHAR_TABLE_DIR");
  if (dir && *dir) {
    std::string path = std::string(dir) + "/" + kind_name(kind) + ".json";
    std::ifstream in(path);
    if (!in) throw MathError("UNICHAR_TABLE_DIR set but cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    t = from_json(buf.str());
    if (t.kind() != kind) throw MathError("table kind mismatch in " + path);
  } else {
    t = load(kind);
  }
  ValidationReport rep = t.validate();
  if (!rep.pass) {
    std::string msg = "corrupt " + kind_name(kind) + " table:";
    for (const auto& f : rep.failures) msg += " " + f + ";";
    throw MathError(msg);
  }
  return cache.emplace(kind, std::move(t)).first->second;
}

RootSystemTable RootSystemTable::mutated(int entry_index) const {
  RootSystemTable t = *this;
  t.entries_.at(entry_index).c = -t.entries_.at(entry_index).c;
  return t;
}

void RootSystemTable::index_positions() {
  pos_.assign(root_count() + 1, -1);
  int p = 0;
  for (int r : order_) {
    if (height(r) <= hmax_) pos_[r] = p++;
  }
}

std::vector<int> RootSystemTable::quotient_roots() const {
  std::vector<int> v;
  for (int i = 1; i <= root_count(); ++i)
    if (height(i) <= hmax_) v.push_back(i);
  return v;
}

std::vector<int> RootSystemTable::central_roots() const {
  return roots_of_height(hmax_);
}

std::vector<int> RootSystemTable::roots_of_height(int h) const {
  std::vector<int> v;
  for (int i = 1; i <= root_count(); ++i)
    if (height(i) == h) v.push_back(i);
  return v;
}

int RootSystemTable::root_of_coeffs(const std::array<std::int8_t, 8>& c) const {
  for (int i = 1; i <= root_count(); ++i)
    if (root(i).coeffs == c) return i;
  return 0;
}

std::optional<std::pair<int, int>> RootSystemTable::commutator(
    int i, int j, bool truncate) const {
  for (const CommEntry& e : entries_) {
    int k = -1, c = 0;
    if (e.i == i && e.j == j) {
      k = e.k;
      c = e.c;
    } else if (e.i == j && e.j == i) {
      k = e.k;
      c = -e.c;
    } else {
      continue;
    }
    if (truncate && height(k) > hmax_) return std::nullopt;
    return std::make_pair(k, c);
  }
  return std::nullopt;
}

std::set<int> RootSystemTable::bad_primes() const {
  std::set<int> out;
  for (int j = 0; j < rank_; ++j) {
    int a = highest_[j];
    for (int d = 2; d <= a; ++d)
      if (a % d == 0) {
        bool prime = true;
        for (int e = 2; e * e <= d; ++e) prime &= (d % e != 0);
        if (prime) out.insert(d);
      }
  }
  return out;
}

ValidationReport RootSystemTable::validate() const {
  ValidationReport rep;
  rep.entry_count = static_cast<int>(entries_.size());

  KindData d = kind_data(kind_);
  if (root_count() != d.nroots) rep.fail("root count mismatch");

  // heights consistent with coefficient sums; all roots distinct
  for (int i = 1; i <= root_count(); ++i) {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += root(i).coeffs[j];
    if (s != height(i))
      rep.fail("height of root " + std::to_string(i) + " inconsistent");
    for (int j = i + 1; j <= root_count(); ++j)
      if (root(i).coeffs == root(j).coeffs)
        rep.fail("duplicate roots " + std::to_string(i) + "," + std::to_string(j));
  }

  // normal-form order is a permutation covering every root
  {
    std::vector<bool> seen(root_count() + 1, false);
    for (int r : order_) {
      if (r < 1 || r > root_count() || seen[r]) {
        rep.fail("normal-form order malformed");
        break;
      }
      seen[r] = true;
    }
    for (int i = 1; i <= root_count(); ++i)
      if (!seen[i]) rep.fail("normal-form order misses root " + std::to_string(i));
  }

  // each entry: sum rule, height rule, sign domain, no duplicates
  for (size_t n = 0; n < entries_.size(); ++n) {
    const CommEntry& e = entries_[n];
    std::array<std::int8_t, 8> sum{};
    for (int j = 0; j < rank_; ++j)
      sum[j] = static_cast<std::int8_t>(root(e.i).coeffs[j] + root(e.j).coeffs[j]);
    if (root(e.k).coeffs != sum)
      rep.fail("entry " + std::to_string(n) + ": target is not the root sum");
    if (height(e.k) != height(e.i) + height(e.j))
      rep.fail("entry " + std::to_string(n) + ": height rule violated");
    if (e.c != 1 && e.c != -1)
      rep.fail("entry " + std::to_string(n) + ": coefficient not +-1");
    for (size_t m = n + 1; m < entries_.size(); ++m) {
      const CommEntry& e2 = entries_[m];
      bool same = (e2.i == e.i && e2.j == e.j) || (e2.i == e.j && e2.j == e.i);
      if (same) rep.fail("duplicate entry for pair (" + std::to_string(e.i) +
                         "," + std::to_string(e.j) + ")");
    }
  }

  // completeness: every unordered pair summing to a table root has an entry
  for (int i = 1; i <= root_count(); ++i)
    for (int j = i + 1; j <= root_count(); ++j) {
      std::array<std::int8_t, 8> sum{};
      for (int r = 0; r < rank_; ++r)
        sum[r] = static_cast<std::int8_t>(root(i).coeffs[r] + root(j).coeffs[r]);
      int k = root_of_coeffs(sum);
      if (k == 0) continue;
      if (!commutator(i, j, /*truncate=*/false))
        rep.fail("missing entry for pair (" + std::to_string(i) + "," +
                 std::to_string(j) + ") -> " + std::to_string(k));
    }

  // Sign consistency. The D4 list is the characteristic-2 table: every
  // coefficient is +1 and that is exactly what is checked. For E6/E8 the
  // signs are honest structure constants, so the graded Jacobi identity
  // must hold over the integers within the stored height range.
  if (kind_ == RootKind::D4) {
    for (size_t n = 0; n < entries_.size(); ++n)
      if (entries_[n].c != 1)
        rep.fail("entry " + std::to_string(n) + ": D4 coefficients are all +1");
  } else {
    auto n_of = [&](int a, int b) -> int {
      auto r = commutator(a, b, /*truncate=*/false);
      return r ? r->second : 0;
    };
    for (int a = 1; a <= root_count(); ++a)
      for (int b = a + 1; b <= root_count(); ++b)
        for (int c = b + 1; c <= root_count(); ++c) {
          std::array<std::int8_t, 8> sum{};
          for (int r = 0; r < rank_; ++r)
            sum[r] = static_cast<std::int8_t>(
                root(a).coeffs[r] + root(b).coeffs[r] + root(c).coeffs[r]);
          if (root_of_coeffs(sum) == 0) continue;
          int total = 0;
          auto term = [&](int x, int y, int z) {
            auto xy = commutator(x, y, /*truncate=*/false);
            if (!xy) return 0;
            return xy->second * n_of(xy->first, z);
          };
          total = term(a, b, c) + term(b, c, a) + term(c, a, b);
          if (total != 0)
            rep.fail("Jacobi identity fails on roots (" + std::to_string(a) +
                     "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
  }
  return rep;
}

std::string RootSystemTable::to_json() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind_);
  j["rank"] = rank_;
  j["hmax"] = hmax_;
  j["order"] = order_;
  {
    std::vector<int> h(highest_.begin(), highest_.begin() + rank_);
    j["highest_root"] = h;
  }
  nlohmann::json roots = nlohmann::json::array();
  for (int i = 1; i <= root_count(); ++i) {
    nlohmann::json r;
    r["i"] = i;
    r["height"] = height(i);
    std::vector<int> c(root(i).coeffs.begin(), root(i).coeffs.begin() + rank_);
    r["coeffs"] = c;
    roots.push_back(r);
  }
  j["roots"] = roots;
  nlohmann::json comms = nlohmann::json::array();
  for (const CommEntry& e : entries_) {
    nlohmann::json r;
    r["i"] = e.i;
    r["j"] = e.j;
    r["k"] = e.k;
    r["c"] = e.c;
    comms.push_back(r);
  }
  j["commutators"] = comms;
  return j.dump(2);
}

RootSystemTable RootSystemTable::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RootSystemTable t;
  t.kind_ = kind_from_name(j.at("kind").get<std::string>());
  t.rank_ = j.at("rank").get<int>();
  t.hmax_ = j.at("hmax").get<int>();
  for (const auto& r : j.at("roots")) {
    RootEntry e;
    e.height = r.at("height").get<int>();
    auto c = r.at("coeffs").get<std::vector<int>>();
    for (size_t i = 0; i < c.size(); ++i) e.coeffs[i] = static_cast<std::int8_t>(c[i]);
    t.roots_.push_back(e);
  }
  for (const auto& r : j.at("commutators"))
    t.entries_.push_back({r.at("i").get<int>(), r.at("j").get<int>(),
                          r.at("k").get<int>(), r.at("c").get<int>()});
  t.order_ = j.at("order").get<std::vector<int>>();
  auto h = j.at("highest_root").get<std::vector<int>>();
  for (size_t i = 0; i < h.size(); ++i) t.highest_[i] = static_cast<std::int8_t>(h[i]);
  t.index_positions();
  return t;
}

FqElem torus_weight(const RootSystemTable& table, const FieldSpec& field,
                    int root_index, const std::vector<FqElem>& t) {
  if (static_cast<int>(t.size()) != table.rank())
    throw MathError("torus element needs one parameter per simple root");
  FqElem w = field.one();
  const RootEntry& r = table.root(root_index);
  for (int j = 0; j < table.rank(); ++j) {
    if (t[j].is_zero()) throw MathError("torus parameters must be nonzero");
    w = field.mul(w, field.pow(t[j], r.coeffs[j]));
  }
  return w;
}

}  // namespace unichar
