#ifndef KUMMERLOG_KODAIRA_HPP
#define KUMMERLOG_KODAIRA_HPP

#include "kummerlog/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kummerlog {

enum class KodairaTag { I0, In, II, III, IV, I0s, Ins, IVs, IIIs, IIs };

struct KodairaType {
    KodairaTag tag = KodairaTag::I0;
    int n = 0;                // for In and In*
    std::optional<bool> split; // multiplicative types only

    std::string to_string() const; // "I5", "I2*", "IV*"
    bool operator==(KodairaType const& o) const { return tag == o.tag && n == o.n; }
};

KodairaType parse_kodaira(std::string const& s);

/* Special fiber: intersection matrix and multiplicities. Component 0 is the
 * one meeting the zero section. */
struct FiberGeometry {
    IntMatrix M;
    std::vector<long> multiplicity;

    std::size_t size() const { return multiplicity.size(); }
    /* throws unless: symmetric, negative diagonal (r > 1), nonnegative
     * off-diagonal, M*m = 0, and M minus component 0 negative definite */
    void validate() const;
};

FiberGeometry fiber_geometry(KodairaType const& k);

class ComponentGroup {
    std::vector<mpz_class> invariants_;
    std::vector<int> generators_;                    // component indices
    std::vector<std::vector<mpq_class>> form_;       // on generators, in [0,1)
    std::vector<std::optional<std::vector<mpz_class>>> coords_; // per component, mult-1 only
    RatMatrix M0inv_;
    std::vector<long> mult_;

    friend ComponentGroup component_group_from_matrix(FiberGeometry const&);

  public:
    std::vector<mpz_class> const& invariants() const { return invariants_; }
    mpz_class order() const;
    std::vector<int> const& generator_components() const { return generators_; }
    std::vector<std::vector<mpq_class>> const& form() const { return form_; }

    /* coordinates of the class of a multiplicity-one component */
    std::vector<mpz_class> coordinates(int component) const;
    /* pairing of group elements in coordinates, in [0,1) */
    mpq_class pair(std::vector<mpz_class> const& a, std::vector<mpz_class> const& b) const;
    /* the rational lift e_i^T M0^{-1} e_j, before reduction mod Z */
    mpq_class correction(int i, int j) const;
    mpq_class pair_components(int i, int j) const { return frac(correction(i, j)); }
    bool is_multiplicity_one(int component) const;
    bool in_subgroup(std::vector<mpz_class> const& x, std::vector<std::vector<mpz_class>> const& gens) const;

  private:
    static mpq_class frac(mpq_class const& q);
};

ComponentGroup component_group_from_matrix(FiberGeometry const& F);

/* Geometric component-group order from the classification alone. */
long classical_component_order(KodairaType const& k);

} // namespace kummerlog

#endif
