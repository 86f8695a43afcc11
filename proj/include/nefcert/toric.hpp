#pragma once

// Binomial ideals: toric ideals, reduced Groebner bases under graded
// reverse-lex orders, initial ideals and their Stanley-Reisner complexes,
// and the structure checks for the centrally symmetric, Cayley and
// origin-augmented toric ideals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nefcert/config.hpp"
#include "nefcert/linalg.hpp"
#include "nefcert/polytope.hpp"

namespace nefcert {

using Exponent = std::vector<std::int32_t>;

/// x^plus - x^minus. Supports are disjoint; inside a GroebnerBasis `plus`
/// is the leading monomial.
struct Binomial {
  Exponent plus;
  Exponent minus;

  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// x^{u+} - x^{u-}.
Binomial binomial_from_vector(const IntVector& u);
std::int64_t degree(const Exponent& e);
bool is_squarefree(const Exponent& e);

/// Graded reverse-lex order. `ranking` lists the variables from smallest to
/// largest.
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(std::vector<std::size_t> ranking);
  /// Variable `smallest` first, the others by increasing index.
  static TermOrder with_smallest(std::size_t n, std::size_t smallest);

  std::size_t size() const noexcept { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }
  /// position()[v] is the rank of variable v.
  const std::vector<std::size_t>& position() const noexcept { return position_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Exponent& a, const Exponent& b) const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) { return a.ranking_ == b.ranking_; }

 private:
  std::vector<std::size_t> ranking_;
  std::vector<std::size_t> position_;
};

struct GroebnerBasis {
  TermOrder order;
  std::vector<Binomial> elements;  // sorted by leading monomial
  bool reduced = true;

  std::size_t variable_count() const noexcept { return order.size(); }
};

/// Generators of I_A for a graded matrix (configuration or homogenized):
/// lattice basis binomials saturated variable by variable until a full pass
/// leaves every per-variable reduced basis unchanged.
std::vector<Binomial> toric_ideal(const IntMatrix& a);

/// The reduced Groebner basis. Binomials are kept with common factors
/// cancelled, so for a non-prime input the result belongs to the smallest
/// cancellation-closed ideal containing it (for toric ideals, the ideal itself).
GroebnerBasis buchberger_reduced(std::vector<Binomial> gens, const TermOrder& order);

/// Normal form of x^m modulo the leading terms of `g` (one-sided binomial
/// rewriting).
Exponent normal_form(const Exponent& m, const GroebnerBasis& g);
bool reduces_to_zero(const Binomial& f, const GroebnerBasis& g);

struct MonomialIdeal {
  std::vector<Exponent> generators;
};

MonomialIdeal initial_ideal(const GroebnerBasis& g);
bool is_squarefree(const MonomialIdeal& ideal);

struct SimplicialComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::size_t>> facets;  // 0-based vertex indices, sorted
};

/// Throws NotSquarefree when the ideal has a non-squarefree generator.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal, std::size_t n);
/// f_{-1}, f_0, ..., f_{D-1}.
std::vector<std::int64_t> f_vector(const SimplicialComplex& k);
Polynomial h_polynomial(const SimplicialComplex& k);

/// Every facet is a unimodular simplex relative to the lattice generated by
/// the columns of `points`: the facet columns are independent, as many as
/// rank(points), and generate the same lattice.
bool triangulation_unimodular(const SimplicialComplex& k, const IntMatrix& points);

std::string to_string(const Exponent& m, std::span<const std::string> names);
std::string to_string(const Binomial& b, std::span<const std::string> names);

/// Which toric ideal a conformance run examined.
enum class GbMode { kCentrallySymmetric, kCayley, kOriginCayley };

std::string_view to_string(GbMode mode);

struct ConformanceReport {
  GbMode mode = GbMode::kCentrallySymmetric;
  IntMatrix matrix;                       // the toric matrix whose ideal was computed
  std::vector<std::string> variable_names;
  GroebnerBasis basis;
  std::vector<Binomial> structural;       // x_i y_i - z^2, x_i y_i - x1 y1 or x_i y_i - x0 y0
  std::vector<Binomial> g;                // the remaining elements, in x1..xn, y1..yn naming
  bool conforms = true;
  std::vector<std::string> failures;      // clause and violating element

  std::size_t s() const noexcept { return g.size(); }
};

/// I_{A±} under z < x1 < y1 < ... < xn < yn. Throws NotUnimodular.
ConformanceReport conform_pm(const Configuration& a);
/// I of P_A * (-P_A) under x1 < y1 < ... < xn < yn. The g's are compared
/// with those of `pm`. Throws NotUnimodular or PreconditionViolated.
ConformanceReport conform_cayley(const Configuration& a, const ConformanceReport& pm);
ConformanceReport conform_cayley(const Configuration& a);
/// I of P_{A_0} * (-P_{A_0}) under x0 < y0 < x1 < ... < yn.
ConformanceReport conform_azero(const Configuration& a, const ConformanceReport& pm);
ConformanceReport conform_azero(const Configuration& a);

/// Toric matrices of the three modes; variable layout as in the reports.
IntMatrix cayley_matrix(const IntMatrix& a);
IntMatrix origin_cayley_matrix(const IntMatrix& a);

/// Names g's in the common x1..xn, y1..yn layout.
std::vector<std::string> xy_names(std::size_t n);

}  // namespace nefcert
