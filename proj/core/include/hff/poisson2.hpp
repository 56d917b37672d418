#ifndef HFF_POISSON2_HPP
#define HFF_POISSON2_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "hff/functional.hpp"

namespace hff {

using bigint = boost::multiprecision::cpp_int;

// Product subgroup Y = { a in X : a(k) in <s_k> for every site k }, given by
// one generator step per site, each dividing N'. Its annihilator under the
// space's pairing is the product subgroup with generators N'/s_k, so
// |Y| |Y^perp| = |X| exactly.
struct ProductSubgroup {
    FunctionalSpace space;
    std::vector<std::int64_t> generators;
};

ProductSubgroup make_product_subgroup(const FunctionalSpace& space,
                                      std::vector<std::int64_t> generators);
// Convenience: the same generator at every site.
ProductSubgroup make_product_subgroup(const FunctionalSpace& space, std::int64_t generator);

ProductSubgroup annihilator_product(const ProductSubgroup& y);

// |Y| = prod_k N'/s_k and |X| = N'^(H^2); these overflow 64 bits quickly,
// so they are counted in arbitrary precision.
bigint product_subgroup_order(const ProductSubgroup& y);
bigint functional_space_order(const FunctionalSpace& space);

// Both sides of the functional Poisson identity
//   |Y^perp|^(-1/2) sum_{b in Y^perp} (F f)(b) = |Y|^(-1/2) sum_{a in Y} f(a)
// (Plain pairing on Plain spaces, epsilon pairing on Epsilon spaces). The
// dense overload enumerates both sums; the factored overload combines
// per-site normalized Poisson sides in scaled arithmetic, so it works at
// any space size.
std::pair<cdouble, cdouble> poisson_functional_pair(const DenseFunctional& f,
                                                    const ProductSubgroup& y);
std::pair<ScaledComplex, ScaledComplex> poisson_functional_pair(const FactoredFunctional& f,
                                                                const ProductSubgroup& y);

// Per-site content of the Poisson identity applied to g_xi: the restricted
// transform sum against its closed theta form u_k theta(i u_k^2 xi), where
// u_k = s_k / sqrt(N') is the generator of Y_k in the site coordinate.
struct ThetaSiteReport {
    std::int64_t site = 0;        // centered level-1 index of the site
    std::int64_t generator = 1;   // s_k
    double coord_generator = 0;   // u_k
    cdouble computed;             // sum_{p in Y_k^perp} (F_k g_k)(p)
    cdouble closed_form;          // u_k theta(i u_k^2 xi)
    double abs_diff = 0;
};

std::vector<ThetaSiteReport> theta_product_report(const FunctionalSpace& space, cdouble xi,
                                                  const std::vector<std::int64_t>& generators);

// The finite m-scaled identity on the functional space: for m | 2N' and
// m | N'/s_k at every site,
//   lhs = prod_k [ sqrt(N') c_im sum_{b in Y_k^perp} exp(+i pi z^2/(m N')) ]
//   rhs = prod_k [ s_k       sum_{a in Y_k}     exp(-i pi m z^2 / N') ]
// and lhs = rhs exactly.
std::pair<cdouble, cdouble> scaled_gauss_functional_identity(
    const FunctionalSpace& space, std::int64_t m, const std::vector<std::int64_t>& generators);

}  // namespace hff

#endif
