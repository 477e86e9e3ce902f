#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace linkalg {

using Exponent = std::uint32_t;

/// Exponent vector of a power product.  Length always equals the ring's variable count.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> e) : exps_(e) {}
  explicit Monomial(const std::vector<Exponent>& e) : exps_(e.begin(), e.end()) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const Storage& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  /// Bit i set iff variable i occurs.  Requires size() <= 64.
  std::uint64_t support() const;
  /// True if at most one variable occurs.
  bool is_pure_power() const;
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;
  /// this / divisor; throws PreconditionError when divisor does not divide.
  Monomial quotient(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent vectors; used only for container ordering.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  Storage exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Term orders.  `block` is a product order: degrevlex on the first `block_size`
/// variables, ties broken by degrevlex on the rest; it eliminates the first block.
class MonomialOrder {
 public:
  enum class Kind { lex, degrevlex, block };

  MonomialOrder() = default;
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static MonomialOrder block(std::size_t first_block) { return MonomialOrder(Kind::block, first_block); }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  /// -1, 0, +1 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}
  Kind kind_ = Kind::degrevlex;
  std::size_t block_ = 0;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring Q[x_1..x_n] with a fixed term order.  The homogeneous maximal
/// ideal (x_1..x_n) plays the role of the maximal ideal of a local ring.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex());
  /// Parses "x,y,z" (whitespace tolerated).
  static RingPtr from_list(const std::string& comma_separated,
                           MonomialOrder order = MonomialOrder::degrevlex());

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  /// Same variables under another order.
  RingPtr with_order(MonomialOrder order) const;
  /// Prepends fresh variables (named after `hints`, made unique) under the block
  /// order that eliminates them.  Variable i of this ring becomes k + i.
  RingPtr with_elimination_vars(const std::vector<std::string>& hints) const;
  /// Keeps only the variables whose indices are listed (ascending), degrevlex order.
  RingPtr subring(const std::vector<std::size_t>& keep) const;

  bool same_ring(const Ring& other) const { return names_ == other.names_ && order_ == other.order_; }
  bool same_variables(const Ring& other) const { return names_ == other.names_; }

  std::string to_string() const;

 private:
  Ring(std::vector<std::string> names, MonomialOrder order);
  std::vector<std::string> names_;
  MonomialOrder order_;
};

}  // namespace linkalg
