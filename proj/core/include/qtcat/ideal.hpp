#pragma once

#include <string>
#include <vector>

#include "qtcat/linalg.hpp"
#include "qtcat/poly.hpp"
#include "qtcat/series.hpp"

namespace qtcat {

// Parameters of J(d1, d2) = (a,b)^d1 ∩ (c,d)^d2 ∩ (a-c,b-d)^d1 in Q[a,b,c,d].
struct IdealSpec {
  int d1 = 0;
  int d2 = 0;
  IdealSpec(int d1_, int d2_);
};

enum class GenFamily { A, B, C, D };
char family_letter(GenFamily f);

struct GeneratorDescriptor {
  GenFamily family;
  int i = 0;  // unused for family D
  int j = 0;
  Bidegree bidegree;
  Poly value;
};

// Membership of p in the monomial ideal M = (a,b)^d1 ∩ (c,d)^d2: every
// monomial needs combined (a,b)-degree >= d1 and (c,d)-degree >= d2. The
// monomial ideal does not need the standing assumption d1 <= d2, so a plain
// pair overload is provided.
bool member_M(const Poly& p, int d1, int d2);
bool member_M(const Poly& p, const IdealSpec& spec);

// Membership in (l1, l2)^k for independent linear forms, decided by a linear
// change of coordinates sending l1 -> u, l2 -> v followed by monomial
// inspection of the combined (u,v)-degree.
bool member_linear_power(const Poly& p, const Poly& l1, const Poly& l2, int k);

bool member_J(const Poly& p, const IdealSpec& spec);

GeneratorDescriptor generator(GenFamily fam, int i, int j,
                              const IdealSpec& spec);
// All generators, ordered family A, B, C, D, then by j, then i.
std::vector<GeneratorDescriptor> generator_list(const IdealSpec& spec);
long expected_generator_count(const IdealSpec& spec);

struct GradedPiece {
  Bidegree bidegree;
  std::vector<Poly> basis;
};

// Brute-force basis of the bidegree slice of J: membership constraints are
// linear in monomial coefficients; the kernel is computed by exact
// elimination with pivoting in the fixed term order.
GradedPiece graded_piece_oracle(const IdealSpec& spec, Bidegree bd);
long graded_dim_oracle(const IdealSpec& spec, Bidegree bd);

// Hilbert coefficients by direct lattice-point counting over the basis
// families (with the overlap between the B- and C-parametrizations of the
// D generators subtracted once).
TruncSeries hilbert_from_basis(const IdealSpec& spec, Window w);

// The closed-form bigraded Hilbert series (four summands).
RExpr hilbert_closed(const IdealSpec& spec);

struct BidegreeIssue {
  Bidegree bidegree;
  long expected = 0;
  long actual = 0;
};

struct GenerationReport {
  bool ok = true;
  int cutoff = 0;
  long cells_checked = 0;
  std::vector<BidegreeIssue> failures;
};

// Degreewise comparison of span{m * g : g generator} with the oracle for all
// bidegrees of total degree <= cutoff.
GenerationReport check_generation(const IdealSpec& spec, int cutoff);

struct J111Report {
  bool ok = true;
  bool factorizations_ok = true;
  std::vector<std::string> factorization_failures;
  long cells_checked = 0;
  std::vector<BidegreeIssue> span_failures;
};

// Checks J(d1,d2) = J(1,1)^d1 * J(0,1)^(d2-d1): the per-generator symbolic
// factorizations as exact polynomial identities, then degreewise span
// equality of the product ideal with the oracle up to the cutoff.
J111Report check_J111(const IdealSpec& spec, int cutoff);

// The 2n-variable ideal J' = ∩_{i<j} (t_i - t_j, x_i - x_j)^{d_ij}.
struct GeneralIdealSpec {
  int n = 0;
  std::vector<int> d;  // ascending
  explicit GeneralIdealSpec(std::vector<int> d_);
  int dij(int i, int j) const;  // 0-based
};

bool member_J_general(const Poly& p, const GeneralIdealSpec& spec);
long graded_dim_oracle_general(const GeneralIdealSpec& spec, Bidegree bd);

// Monomials of the bidegree slice, descending term order.
std::vector<Mono> slice_monomials_abcd(Bidegree bd);
std::vector<Mono> slice_monomials_general(int n, Bidegree bd);

}  // namespace qtcat
