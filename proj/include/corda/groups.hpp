#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corda/numeric.hpp"

namespace corda {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// An element is its owning group plus an opaque integer payload.  Payload
// layout is the group's business; elements of different group instances never
// mix.
class GroupElement {
public:
  GroupElement() = default;
  GroupElement(GroupPtr group, std::vector<Int> data);

  const GroupPtr& group() const { return group_; }
  const std::vector<Int>& data() const { return data_; }

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;
  GroupElement power(Int n) const;
  bool is_identity() const;
  std::string str() const;

  bool operator==(const GroupElement& rhs) const;
  bool operator!=(const GroupElement& rhs) const { return !(*this == rhs); }

private:
  GroupPtr group_;
  std::vector<Int> data_;
};

class Group : public std::enable_shared_from_this<Group> {
public:
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual std::vector<Int> identity_data() const = 0;
  virtual std::vector<Int> multiply_data(const std::vector<Int>& a,
                                         const std::vector<Int>& b) const = 0;
  virtual std::vector<Int> inverse_data(const std::vector<Int>& a) const = 0;
  virtual bool check_data(const std::vector<Int>& a) const = 0;
  virtual std::string element_string(const std::vector<Int>& a) const;

  // Finite enumerable groups override both; everything else refuses.
  virtual std::optional<size_t> size() const { return std::nullopt; }
  virtual std::vector<GroupElement> elements() const;

  GroupElement identity() const;
  GroupElement element(std::vector<Int> data) const; // validates payload
};

// ---- finite groups by multiplication table -------------------------------

// Index 0 must be the identity.  Throws unless the table is a group.
void validate_table(const std::vector<std::vector<Int>>& table);

class TableGroup final : public Group {
public:
  TableGroup(std::string name, std::vector<std::vector<Int>> table,
             std::vector<std::string> element_names = {});

  std::string name() const override { return name_; }
  std::vector<Int> identity_data() const override { return {0}; }
  std::vector<Int> multiply_data(const std::vector<Int>& a,
                                 const std::vector<Int>& b) const override;
  std::vector<Int> inverse_data(const std::vector<Int>& a) const override;
  bool check_data(const std::vector<Int>& a) const override;
  std::string element_string(const std::vector<Int>& a) const override;
  std::optional<size_t> size() const override { return table_.size(); }
  std::vector<GroupElement> elements() const override;

  const std::vector<std::vector<Int>>& table() const { return table_; }

private:
  std::string name_;
  std::vector<std::vector<Int>> table_;
  std::vector<std::string> element_names_;
  std::vector<Int> inverse_; // precomputed
};

// "Z1".."Z12", "Z2xZ2", "Z2xZ4", "S3", "D4", "Q8".
GroupPtr table_group(const std::string& name);
std::vector<std::string> table_group_names();

// ---- Z/n (n >= 1) and Z (n == 0); payload [value] -------------------------

class CyclicGroup final : public Group {
public:
  explicit CyclicGroup(Int modulus);

  std::string name() const override;
  std::vector<Int> identity_data() const override { return {0}; }
  std::vector<Int> multiply_data(const std::vector<Int>& a,
                                 const std::vector<Int>& b) const override;
  std::vector<Int> inverse_data(const std::vector<Int>& a) const override;
  bool check_data(const std::vector<Int>& a) const override;
  std::string element_string(const std::vector<Int>& a) const override;
  std::optional<size_t> size() const override;
  std::vector<GroupElement> elements() const override;

  Int modulus() const { return modulus_; }

private:
  Int modulus_;
};

GroupPtr cyclic_group(Int modulus);

// ---- Z^rank; payload = coordinates ----------------------------------------

class LatticeGroup final : public Group {
public:
  explicit LatticeGroup(size_t rank);

  std::string name() const override;
  std::vector<Int> identity_data() const override;
  std::vector<Int> multiply_data(const std::vector<Int>& a,
                                 const std::vector<Int>& b) const override;
  std::vector<Int> inverse_data(const std::vector<Int>& a) const override;
  bool check_data(const std::vector<Int>& a) const override;
  std::string element_string(const std::vector<Int>& a) const override;

  size_t rank() const { return rank_; }

private:
  size_t rank_;
};

GroupPtr lattice_group(size_t rank);

// ---- free products of cyclic groups ---------------------------------------
//
// Factors Z/m_1 * ... * Z/m_k, modulus 0 meaning Z.  Payload is the reduced
// word [f_0, e_0, f_1, e_1, ...]: factor indices with adjacent entries
// distinct, exponents normalized to 1..m-1 (finite) or nonzero (infinite).

struct Syllable {
  Int factor;
  Int exponent;
  bool operator==(const Syllable&) const = default;
};

std::vector<Syllable> free_reduce(const std::vector<Int>& moduli,
                                  const std::vector<Syllable>& word);

class FreeProductGroup final : public Group {
public:
  explicit FreeProductGroup(std::vector<Int> moduli);

  std::string name() const override;
  std::vector<Int> identity_data() const override { return {}; }
  std::vector<Int> multiply_data(const std::vector<Int>& a,
                                 const std::vector<Int>& b) const override;
  std::vector<Int> inverse_data(const std::vector<Int>& a) const override;
  bool check_data(const std::vector<Int>& a) const override;
  std::string element_string(const std::vector<Int>& a) const override;

  const std::vector<Int>& moduli() const { return moduli_; }
  static std::vector<Syllable> syllables(const std::vector<Int>& data);
  static std::vector<Int> pack(const std::vector<Syllable>& word);

  // Single generator x_factor^exponent (before reduction).
  GroupElement generator(Int factor, Int exponent = 1) const;

private:
  std::vector<Int> moduli_;
};

GroupPtr free_product_group(std::vector<Int> moduli);

} // namespace corda
