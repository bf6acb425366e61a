#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "reeskit/groebner.hpp"

namespace reeskit {

/// Finitely generated ideal of a polynomial ring. The reduced Gröbner basis is
/// computed on first use and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const std::vector<Polynomial>& gb() const;

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return gb().empty(); }

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;
  Ideal plus(const std::vector<Polynomial>& extra) const;
  Ideal power(unsigned n) const;

  /// Equality as ideals (reduced Gröbner bases coincide).
  friend bool operator==(const Ideal& a, const Ideal& b);
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Reduced Gröbner basis of the given generators under the ring's order.
std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb);
/// Exact quotient f / g; throws if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Ring with `extra` variables prepended as an eliminable first block
/// (weighted degrevlex by `extra_weights`), followed by the ring's own order.
RingPtr with_elimination_block(const RingPtr& ring, const std::vector<std::string>& extra,
                               const std::vector<int>& extra_weights);

/// L ∩ k[remaining variables], returned inside L's ring.
Ideal eliminate(const Ideal& L, const std::vector<std::string>& vars);

Ideal saturate(const Ideal& L, const Polynomial& g);
Ideal saturate_ideal(const Ideal& L, const Ideal& K);
Ideal ideal_quotient(const Ideal& L, const Ideal& K);
Ideal ideal_quotient(const Ideal& L, const Polynomial& g);
Ideal intersect(const Ideal& a, const Ideal& b);
bool radical_membership(const Polynomial& f, const Ideal& L);

/// Ring map from a polynomial ring into target_ring / target_ideal, given by
/// the image of each source variable.
struct RingMap {
  RingPtr source;
  RingPtr target;
  Ideal target_ideal;
  std::vector<Polynomial> images;
  bool graded = false;

  Polynomial apply(const Polynomial& f) const;
  /// Degree of each image equals the source variable's weight (when graded).
  bool respects_grading() const;
};

/// ker φ through the graph ideal (x_i - φ(x_i)) + target ideal in one ring,
/// eliminating the target's variables.
Ideal kernel_of_ring_map(const RingMap& phi);

/// Krull dimension of ring/L via maximal independent sets of the initial
/// ideal; -1 for the unit ideal.
int krull_dim(const Ideal& L);

}  // namespace reeskit
