#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace reeskit {

inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector. Slots beyond the ring's variable count stay zero, so
/// equality and divisibility never need the variable count.
struct Monomial {
  std::array<std::int32_t, kMaxVars> exp{};

  static Monomial from(std::span<const int> e);
  std::int32_t operator[](std::size_t i) const { return exp[i]; }
  std::int32_t& operator[](std::size_t i) { return exp[i]; }

  bool is_one() const;
  int total_degree() const;
  bool divides(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// A term order built from consecutive variable blocks. Each block compares by
/// (optional) weighted degree first, then by lex or reverse lex inside the
/// block; the first block that distinguishes two monomials decides.
class MonomialOrder {
 public:
  enum class Tiebreak { Lex, RevLex };
  struct Block {
    std::size_t begin = 0, end = 0;
    bool graded = false;          // compare weighted degree first
    std::vector<int> weights;     // one per variable in the block, all > 0 when graded
    Tiebreak tiebreak = Tiebreak::RevLex;
  };

  MonomialOrder() = default;
  static MonomialOrder lex(std::size_t n);
  static MonomialOrder degrevlex(std::size_t n);
  static MonomialOrder weighted(std::vector<int> weights, Tiebreak tb = Tiebreak::RevLex);
  /// Concatenates orders on consecutive variable ranges; the first block is the
  /// most significant, so eliminated variables go first.
  static MonomialOrder block(const std::vector<MonomialOrder>& parts);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::string describe() const;

  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::GT; }

 private:
  std::size_t nvars_ = 0;
  std::vector<Block> blocks_;
};

/// Throws on length mismatch between the order and the declared variable count.
Cmp mono_cmp(const MonomialOrder& order, std::span<const int> m1, std::span<const int> m2);

}  // namespace reeskit
