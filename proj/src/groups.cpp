#include "corda/groups.hpp"

#include <algorithm>
#include <array>

#include "corda/error.hpp"

namespace corda {

GroupElement::GroupElement(GroupPtr group, std::vector<Int> data)
    : group_(std::move(group)), data_(std::move(data)) {}

static void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.group() != b.group()) fail_arg("elements belong to different groups");
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  require_same_group(*this, rhs);
  return GroupElement(group_, group_->multiply_data(data_, rhs.data_));
}

GroupElement GroupElement::inverse() const {
  return GroupElement(group_, group_->inverse_data(data_));
}

GroupElement GroupElement::power(Int n) const {
  GroupElement base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? -static_cast<unsigned long long>(n) : n;
  GroupElement acc = group_->identity();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool GroupElement::is_identity() const { return data_ == group_->identity_data(); }

std::string GroupElement::str() const { return group_->element_string(data_); }

bool GroupElement::operator==(const GroupElement& rhs) const {
  require_same_group(*this, rhs);
  return data_ == rhs.data_;
}

std::string Group::element_string(const std::vector<Int>& a) const {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

std::vector<GroupElement> Group::elements() const {
  fail(Status::unsupported, name() + ": not finitely enumerable");
}

GroupElement Group::identity() const {
  return GroupElement(shared_from_this(), identity_data());
}

GroupElement Group::element(std::vector<Int> data) const {
  if (!check_data(data)) fail_arg(name() + ": invalid element payload");
  return GroupElement(shared_from_this(), std::move(data));
}

// ---- table groups ----------------------------------------------------------

void validate_table(const std::vector<std::vector<Int>>& table) {
  size_t n = table.size();
  if (n == 0) fail_arg("validate_table: empty table");
  for (const auto& row : table) {
    if (row.size() != n) fail_arg("validate_table: not square");
    for (Int v : row)
      if (v < 0 || static_cast<size_t>(v) >= n) fail_arg("validate_table: entry out of range");
  }
  for (size_t i = 0; i < n; ++i)
    if (table[0][i] != static_cast<Int>(i) || table[i][0] != static_cast<Int>(i))
      fail_arg("validate_table: index 0 is not an identity");
  for (size_t i = 0; i < n; ++i) {
    std::vector<bool> in_row(n, false), in_col(n, false);
    for (size_t j = 0; j < n; ++j) {
      in_row[table[i][j]] = true;
      in_col[table[j][i]] = true;
    }
    for (size_t j = 0; j < n; ++j)
      if (!in_row[j] || !in_col[j]) fail_arg("validate_table: row/column not a permutation");
  }
  for (size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (size_t j = 0; j < n; ++j)
      if (table[i][j] == 0 && table[j][i] == 0) has_inverse = true;
    if (!has_inverse) fail_arg("validate_table: element without inverse");
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail_arg("validate_table: not associative");
}

TableGroup::TableGroup(std::string name, std::vector<std::vector<Int>> table,
                       std::vector<std::string> element_names)
    : name_(std::move(name)), table_(std::move(table)),
      element_names_(std::move(element_names)) {
  validate_table(table_);
  if (!element_names_.empty() && element_names_.size() != table_.size())
    fail_arg("TableGroup: name count mismatch");
  inverse_.assign(table_.size(), 0);
  for (size_t i = 0; i < table_.size(); ++i)
    for (size_t j = 0; j < table_.size(); ++j)
      if (table_[i][j] == 0) inverse_[i] = static_cast<Int>(j);
}

std::vector<Int> TableGroup::multiply_data(const std::vector<Int>& a,
                                           const std::vector<Int>& b) const {
  return {table_[a[0]][b[0]]};
}

std::vector<Int> TableGroup::inverse_data(const std::vector<Int>& a) const {
  return {inverse_[a[0]]};
}

bool TableGroup::check_data(const std::vector<Int>& a) const {
  return a.size() == 1 && a[0] >= 0 && static_cast<size_t>(a[0]) < table_.size();
}

std::string TableGroup::element_string(const std::vector<Int>& a) const {
  if (!element_names_.empty()) return element_names_[a[0]];
  return std::to_string(a[0]);
}

std::vector<GroupElement> TableGroup::elements() const {
  std::vector<GroupElement> out;
  for (size_t i = 0; i < table_.size(); ++i)
    out.push_back(GroupElement(shared_from_this(), {static_cast<Int>(i)}));
  return out;
}

namespace {

std::vector<std::vector<Int>> cyclic_table(Int n) {
  std::vector<std::vector<Int>> t(n, std::vector<Int>(n));
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<Int>> product_table(Int m, Int n) {
  // Index m-part * n + n-part.
  Int sz = m * n;
  std::vector<std::vector<Int>> t(sz, std::vector<Int>(sz));
  for (Int i = 0; i < sz; ++i)
    for (Int j = 0; j < sz; ++j)
      t[i][j] = ((i / n + j / n) % m) * n + (i % n + j % n) % n;
  return t;
}

std::vector<std::vector<Int>> s3_table(std::vector<std::string>& names) {
  std::vector<std::array<Int, 3>> perms;
  std::array<Int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<Int>> t(6, std::vector<Int>(6));
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) {
      std::array<Int, 3> c; // apply j first, then i
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<Int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  for (const auto& q : perms)
    names.push_back("[" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]) + "]");
  return t;
}

std::vector<std::vector<Int>> d4_table(std::vector<std::string>& names) {
  // Index a + 4b for r^a s^b; s r = r^-1 s.
  auto mul = [](Int x, Int y) {
    Int a1 = x % 4, b1 = x / 4, a2 = y % 4, b2 = y / 4;
    Int a = ((a1 + (b1 ? -a2 : a2)) % 4 + 4) % 4;
    return a + 4 * ((b1 + b2) % 2);
  };
  std::vector<std::vector<Int>> t(8, std::vector<Int>(8));
  for (Int i = 0; i < 8; ++i)
    for (Int j = 0; j < 8; ++j) t[i][j] = mul(i, j);
  names = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  return t;
}

std::vector<std::vector<Int>> q8_table(std::vector<std::string>& names) {
  // Index: 0=1, 1=-1, then 2a+s for axis a in {i=1,j=2,k=3}, sign s.
  auto axis = [](Int x) { return x < 2 ? 0 : x / 2; };
  auto neg = [](Int x) { return x % 2; };
  auto pack = [](Int s, Int a) { return a == 0 ? s : 2 * a + s; };
  // base[a][b] = (sign, axis) of unit product, axes 0=1,1=i,2=j,3=k.
  static const int base_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int base_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto mul = [&](Int x, Int y) {
    Int a = axis(x), b = axis(y);
    Int s = (neg(x) + neg(y) + base_sign[a][b]) % 2;
    return pack(s, base_axis[a][b]);
  };
  std::vector<std::vector<Int>> t(8, std::vector<Int>(8));
  for (Int i = 0; i < 8; ++i)
    for (Int j = 0; j < 8; ++j) t[i][j] = mul(i, j);
  names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return t;
}

} // namespace

GroupPtr table_group(const std::string& name) {
  std::vector<std::string> names;
  if (name.size() >= 2 && name[0] == 'Z' && name.find('x') == std::string::npos) {
    Int n = 0;
    try {
      n = std::stoll(name.substr(1));
    } catch (...) {
      fail_arg("table_group: unknown name " + name);
    }
    if (n < 1 || n > 12) fail_arg("table_group: cyclic table only up to Z12");
    for (Int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return std::make_shared<TableGroup>(name, cyclic_table(n), names);
  }
  if (name == "Z2xZ2" || name == "Z2xZ4") {
    Int n = name == "Z2xZ2" ? 2 : 4;
    for (Int i = 0; i < 2 * n; ++i)
      names.push_back("(" + std::to_string(i / n) + "," + std::to_string(i % n) + ")");
    return std::make_shared<TableGroup>(name, product_table(2, n), names);
  }
  if (name == "S3") return std::make_shared<TableGroup>(name, s3_table(names), names);
  if (name == "D4") return std::make_shared<TableGroup>(name, d4_table(names), names);
  if (name == "Q8") return std::make_shared<TableGroup>(name, q8_table(names), names);
  fail_arg("table_group: unknown name " + name);
}

std::vector<std::string> table_group_names() {
  std::vector<std::string> out;
  for (int n = 1; n <= 12; ++n) out.push_back("Z" + std::to_string(n));
  out.insert(out.end(), {"Z2xZ2", "Z2xZ4", "S3", "D4", "Q8"});
  return out;
}

// ---- cyclic ----------------------------------------------------------------

CyclicGroup::CyclicGroup(Int modulus) : modulus_(modulus) {
  if (modulus < 0) fail_arg("CyclicGroup: negative modulus");
}

std::string CyclicGroup::name() const {
  return modulus_ == 0 ? "Z" : "Z/" + std::to_string(modulus_);
}

std::vector<Int> CyclicGroup::multiply_data(const std::vector<Int>& a,
                                            const std::vector<Int>& b) const {
  Int s = a[0] + b[0];
  if (modulus_) s %= modulus_;
  return {s};
}

std::vector<Int> CyclicGroup::inverse_data(const std::vector<Int>& a) const {
  Int v = -a[0];
  if (modulus_) v = (v % modulus_ + modulus_) % modulus_;
  return {v};
}

bool CyclicGroup::check_data(const std::vector<Int>& a) const {
  if (a.size() != 1) return false;
  return modulus_ == 0 || (a[0] >= 0 && a[0] < modulus_);
}

std::string CyclicGroup::element_string(const std::vector<Int>& a) const {
  return std::to_string(a[0]);
}

std::optional<size_t> CyclicGroup::size() const {
  if (modulus_ == 0) return std::nullopt;
  return static_cast<size_t>(modulus_);
}

std::vector<GroupElement> CyclicGroup::elements() const {
  if (modulus_ == 0) fail(Status::unsupported, "Z: not finitely enumerable");
  std::vector<GroupElement> out;
  for (Int i = 0; i < modulus_; ++i) out.push_back(GroupElement(shared_from_this(), {i}));
  return out;
}

GroupPtr cyclic_group(Int modulus) { return std::make_shared<CyclicGroup>(modulus); }

// ---- lattice ---------------------------------------------------------------

LatticeGroup::LatticeGroup(size_t rank) : rank_(rank) {
  if (rank == 0) fail_arg("LatticeGroup: rank must be positive");
}

std::string LatticeGroup::name() const { return "Z^" + std::to_string(rank_); }

std::vector<Int> LatticeGroup::identity_data() const { return std::vector<Int>(rank_, 0); }

std::vector<Int> LatticeGroup::multiply_data(const std::vector<Int>& a,
                                             const std::vector<Int>& b) const {
  std::vector<Int> c(rank_);
  for (size_t i = 0; i < rank_; ++i) c[i] = a[i] + b[i];
  return c;
}

std::vector<Int> LatticeGroup::inverse_data(const std::vector<Int>& a) const {
  std::vector<Int> c(rank_);
  for (size_t i = 0; i < rank_; ++i) c[i] = -a[i];
  return c;
}

bool LatticeGroup::check_data(const std::vector<Int>& a) const { return a.size() == rank_; }

std::string LatticeGroup::element_string(const std::vector<Int>& a) const {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

GroupPtr lattice_group(size_t rank) { return std::make_shared<LatticeGroup>(rank); }

// ---- free products ---------------------------------------------------------

static Int normalize_exponent(Int modulus, Int e) {
  if (modulus == 0) return e;
  e %= modulus;
  return e < 0 ? e + modulus : e;
}

std::vector<Syllable> free_reduce(const std::vector<Int>& moduli,
                                  const std::vector<Syllable>& word) {
  std::vector<Syllable> out;
  for (const Syllable& syl : word) {
    if (syl.factor < 0 || static_cast<size_t>(syl.factor) >= moduli.size())
      fail_arg("free_reduce: factor index out of range");
    Int e = normalize_exponent(moduli[syl.factor], syl.exponent);
    if (e == 0) continue;
    if (!out.empty() && out.back().factor == syl.factor) {
      Int merged = normalize_exponent(moduli[syl.factor], out.back().exponent + e);
      out.pop_back();
      if (merged != 0) out.push_back({syl.factor, merged});
    } else {
      out.push_back({syl.factor, e});
    }
  }
  return out;
}

FreeProductGroup::FreeProductGroup(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) fail_arg("FreeProductGroup: no factors");
  for (Int m : moduli_)
    if (m < 0 || m == 1) fail_arg("FreeProductGroup: factor modulus must be 0 or >= 2");
}

std::string FreeProductGroup::name() const {
  std::string s;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += " * ";
    s += moduli_[i] == 0 ? "Z" : "Z/" + std::to_string(moduli_[i]);
  }
  return s;
}

std::vector<Syllable> FreeProductGroup::syllables(const std::vector<Int>& data) {
  std::vector<Syllable> out;
  for (size_t i = 0; i + 1 < data.size(); i += 2) out.push_back({data[i], data[i + 1]});
  return out;
}

std::vector<Int> FreeProductGroup::pack(const std::vector<Syllable>& word) {
  std::vector<Int> out;
  for (const Syllable& s : word) {
    out.push_back(s.factor);
    out.push_back(s.exponent);
  }
  return out;
}

std::vector<Int> FreeProductGroup::multiply_data(const std::vector<Int>& a,
                                                 const std::vector<Int>& b) const {
  std::vector<Syllable> word = syllables(a);
  std::vector<Syllable> tail = syllables(b);
  word.insert(word.end(), tail.begin(), tail.end());
  return pack(free_reduce(moduli_, word));
}

std::vector<Int> FreeProductGroup::inverse_data(const std::vector<Int>& a) const {
  std::vector<Syllable> word = syllables(a);
  std::vector<Syllable> rev;
  for (auto it = word.rbegin(); it != word.rend(); ++it) rev.push_back({it->factor, -it->exponent});
  return pack(free_reduce(moduli_, rev));
}

bool FreeProductGroup::check_data(const std::vector<Int>& a) const {
  if (a.size() % 2) return false;
  std::vector<Syllable> word = syllables(a);
  for (size_t i = 0; i < word.size(); ++i) {
    Int f = word[i].factor, e = word[i].exponent;
    if (f < 0 || static_cast<size_t>(f) >= moduli_.size()) return false;
    Int m = moduli_[f];
    if (m == 0 ? e == 0 : (e < 1 || e >= m)) return false;
    if (i && word[i - 1].factor == f) return false;
  }
  return true;
}

std::string FreeProductGroup::element_string(const std::vector<Int>& a) const {
  if (a.empty()) return "e";
  std::string s;
  for (const Syllable& syl : syllables(a)) {
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(syl.factor + 1);
    if (syl.exponent != 1) s += "^" + std::to_string(syl.exponent);
  }
  return s;
}

GroupElement FreeProductGroup::generator(Int factor, Int exponent) const {
  return GroupElement(shared_from_this(), pack(free_reduce(moduli_, {{factor, exponent}})));
}

GroupPtr free_product_group(std::vector<Int> moduli) {
  return std::make_shared<FreeProductGroup>(std::move(moduli));
}

} // namespace corda
