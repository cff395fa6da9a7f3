#include "fintop/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "fintop/error.hpp"

namespace fintop {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : order_(static_cast<int>(table.size())), name_(std::move(name)) {
  if (order_ < 1) throw Error(ErrorCode::invalid_group, "empty Cayley table");
  if (order_ > kMaxPoints) {
    throw Error(ErrorCode::order_too_large, "order " + std::to_string(order_) + " exceeds 16");
  }
  table_.resize(static_cast<std::size_t>(order_ * order_));
  for (int a = 0; a < order_; ++a) {
    const auto& row = table[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) != order_) {
      throw Error(ErrorCode::invalid_group, "row " + std::to_string(a) + " has the wrong length");
    }
    for (int b = 0; b < order_; ++b) {
      const int v = row[static_cast<std::size_t>(b)];
      if (v < 0 || v >= order_) {
        throw Error(ErrorCode::invalid_group, "entry (" + std::to_string(a) + "," +
                                                  std::to_string(b) + ") out of range");
      }
      table_[index(a, b)] = static_cast<std::uint8_t>(v);
    }
  }
  for (int a = 0; a < order_; ++a) {
    if (mul(identity, a) != a || mul(a, identity) != a) {
      throw Error(ErrorCode::invalid_group, "element 0 is not the identity");
    }
  }
  inverse_.resize(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a) {
    int found = -1;
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == identity && mul(b, a) == identity) {
        found = b;
        break;
      }
    }
    if (found < 0) {
      throw Error(ErrorCode::invalid_group, "element " + std::to_string(a) + " has no inverse");
    }
    inverse_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(found);
  }
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      for (int c = 0; c < order_; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorCode::invalid_group, "not associative at (" + std::to_string(a) + "," +
                                                    std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
}

PointSet FiniteGroup::inverse(PointSet s) const noexcept {
  PointSet out;
  for (int x : s) out.insert(inverse(x));
  return out;
}

PointSet FiniteGroup::product(PointSet lhs, PointSet rhs) const noexcept {
  PointSet out;
  for (int a : lhs) {
    for (int b : rhs) out.insert(mul(a, b));
  }
  return out;
}

PointSet FiniteGroup::left_translate(int g, PointSet s) const noexcept {
  PointSet out;
  for (int x : s) out.insert(mul(g, x));
  return out;
}

PointSet FiniteGroup::right_translate(PointSet s, int g) const noexcept {
  PointSet out;
  for (int x : s) out.insert(mul(x, g));
  return out;
}

std::optional<std::pair<int, int>> FiniteGroup::non_commuting_pair() const noexcept {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) out[static_cast<std::size_t>(a)].push_back(mul(a, b));
  }
  return out;
}

namespace {

using Table = std::vector<std::vector<int>>;

void check_order(long long order, std::string_view what) {
  if (order > kMaxPoints) {
    throw Error(ErrorCode::order_too_large,
                std::string(what) + " has order " + std::to_string(order) + ", limit is 16");
  }
}

Table square(int n) {
  return Table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::unknown_spec, "cyclic group needs n >= 1");
  check_order(n, "cyclic(" + std::to_string(n) + ")");
  Table t = square(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), "cyclic(" + std::to_string(n) + ")");
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw Error(ErrorCode::unknown_spec, "dihedral group needs n >= 1");
  check_order(2LL * n, "dihedral(" + std::to_string(n) + ")");
  Table t = square(2 * n);
  // (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f + g)
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = 0; y < 2 * n; ++y) {
      const int a = x % n, f = x / n, b = y % n, g = y / n;
      const int rot = ((f == 0 ? a + b : a - b) % n + n) % n;
      t[x][y] = rot + n * ((f + g) % 2);
    }
  }
  return FiniteGroup(std::move(t), "dihedral(" + std::to_string(n) + ")");
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw Error(ErrorCode::unknown_spec, "symmetric group needs n >= 1");
  long long factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  check_order(factorial, "symmetric(" + std::to_string(n) + ")");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  Table t = square(order);
  // (g h)(i) = g(h(i))
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(std::move(t), "symmetric(" + std::to_string(n) + ")");
}

FiniteGroup quaternion_group() {
  // Units 1, i, j, k; unit_mul[u][v] = (sign, unit) with sign 1 meaning negative.
  constexpr int unit_mul[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  Table t = square(8);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, sx = x % 2, uy = y / 2, sy = y % 2;
      const int sign = (sx + sy + unit_mul[ux][uy][0]) % 2;
      t[x][y] = 2 * unit_mul[ux][uy][1] + sign;
    }
  }
  return FiniteGroup(std::move(t), "quaternion(8)");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int m = b.order();
  check_order(static_cast<long long>(a.order()) * m, "direct product");
  const int n = a.order() * m;
  Table t = square(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  }
  return FiniteGroup(std::move(t), "direct_product(" + a.name() + "," + b.name() + ")");
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FiniteGroup parse_all() {
    FiniteGroup g = parse();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  FiniteGroup parse() {
    skip_space();
    std::string name;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      name += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_++])));
    }
    if (name.empty()) fail("expected a group name");
    if (name == "direct_product" || name == "product") {
      expect('(');
      FiniteGroup a = parse();
      expect(',');
      FiniteGroup b = parse();
      expect(')');
      return direct_product(a, b);
    }
    int arg = 0;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      arg = number();
      expect(')');
    } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      arg = number();
    } else {
      fail("missing parameter for " + name);
    }
    if (name == "cyclic" || name == "c" || name == "z") return cyclic_group(arg);
    if (name == "dihedral" || name == "d") return dihedral_group(arg);
    if (name == "symmetric" || name == "sym" || name == "s") return symmetric_group(arg);
    if (name == "quaternion" || name == "q") {
      if (arg != 8) fail("only quaternion(8) exists");
      return quaternion_group();
    }
    if (name == "klein" || name == "v") {
      if (arg != 4) fail("only klein(4) exists");
      FiniteGroup k = direct_product(cyclic_group(2), cyclic_group(2));
      return FiniteGroup(k.table(), "klein(4)");
    }
    fail("unknown group '" + name + "'");
  }

  int number() {
    skip_space();
    long long v = 0;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000) fail("parameter too large");
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::unknown_spec, "'" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup builtin_group(std::string_view spec) { return SpecParser(spec).parse_all(); }

std::vector<std::string> builtin_universe(int max_order) {
  static const std::pair<const char*, int> kFixtures[] = {
      {"cyclic2", 2}, {"cyclic3", 3}, {"cyclic4", 4}, {"klein4", 4},       {"cyclic6", 6},
      {"sym3", 6},    {"cyclic8", 8}, {"dihedral4", 8}, {"quaternion8", 8},
  };
  std::vector<std::string> out;
  for (const auto& [name, order] : kFixtures) {
    if (order <= max_order) out.emplace_back(name);
  }
  return out;
}

bool is_subgroup(const FiniteGroup& group, PointSet s) noexcept {
  if (!s.contains(FiniteGroup::identity) || !s.subset_of(group.carrier())) return false;
  return group.product(s, s).subset_of(s) && group.inverse(s).subset_of(s);
}

bool is_normal_subgroup(const FiniteGroup& group, PointSet s) noexcept {
  if (!is_subgroup(group, s)) return false;
  for (int g = 0; g < group.order(); ++g) {
    if (group.left_translate(g, s) != group.right_translate(s, g)) return false;
  }
  return true;
}

std::vector<PointSet> subgroups(const FiniteGroup& group) {
  std::vector<PointSet> out;
  const std::uint32_t count = subset_count(group.order());
  for (std::uint32_t bits = 1; bits < count; bits += 2) {
    const PointSet s = PointSet::from_bits(bits);
    if (is_subgroup(group, s)) out.push_back(s);
  }
  return out;
}

}  // namespace fintop
