#ifndef RIGID_TATE_HPP_
#define RIGID_TATE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigid/series.hpp"

namespace rigid {

struct SimpleClass {
  std::string name;
  unsigned delta = 1;
  unsigned d = 1;
  long mu = 1;
  Polynomial minpoly;  // P_S, monic irreducible
  bool is_unit = false;

  long chi() const { return mu * static_cast<long>(delta * d); }
  // exponent of the inverse form of P_S in the zeta function of S
  long zeta_exponent() const { return -chi() / minpoly.degree(); }
};

// A finite list of simple classes. The constructor enforces: names distinct,
// P_S monic irreducible, deg P_S | delta, chi != 0, deg P_S | chi, exactly one
// class flagged as the unit and that class is (1, 1, 1, t - 1). Throws
// InvalidCategory.
class CategoryDatum {
 public:
  explicit CategoryDatum(std::vector<SimpleClass> simples);
  const std::vector<SimpleClass>& simples() const { return simples_; }
  std::size_t size() const { return simples_.size(); }
  std::size_t unit_index() const { return unit_; }
  std::size_t index_of(const std::string& name) const;

 private:
  std::vector<SimpleClass> simples_;
  std::size_t unit_ = 0;
};

// multiplicity per simple class, aligned with cat.simples()
using ObjectSpec = std::vector<unsigned>;
ObjectSpec spec_from_names(const CategoryDatum& cat, const std::map<std::string, unsigned>& m);

RationalFunction zeta_of_object(const CategoryDatum& cat, const ObjectSpec& m);

struct ConditionReport {
  bool passed = true;
  std::string detail;
  std::vector<std::string> witnesses;  // offending class names
  std::optional<unsigned> bound;       // set for the bounded checks
  std::optional<ObjectSpec> first_violation;
  std::optional<ObjectSpec> second_violation;  // the colliding object for (iv)
};

ConditionReport check_condition_i(const CategoryDatum& cat);
ConditionReport check_condition_ii(const CategoryDatum& cat, unsigned bound = 2);
ConditionReport check_condition_iii(const CategoryDatum& cat);
ConditionReport check_condition_iv(const CategoryDatum& cat, unsigned bound = 2);
ConditionReport check_condition_v(const CategoryDatum& cat);
ConditionReport check_condition_vi(const CategoryDatum& cat);

struct EquivalenceReport {
  ConditionReport i, ii, iii, iv, v, vi;
  // (ii) and (iv) over all objects, decided from the structure of the zeta
  // functions rather than by enumeration
  bool ii_unbounded = true;
  bool iv_unbounded = true;
  bool exact_agree = true;    // i, iii, v pairwise equal
  bool bounded_agree = true;  // bounded ii, iv equal to them as well
  bool vi_implied = true;     // (i..v all true) => vi
  bool consistent() const { return exact_agree && bounded_agree && vi_implied; }
};
EquivalenceReport equivalence_report(const CategoryDatum& cat, unsigned bound = 2);

struct KimuraEntry {
  std::string name;
  long chi = 0;
  bool positive = true;   // parity of the grading: sign of chi
  unsigned power = 0;     // chi + 1 or -chi + 1
  bool checked = false;   // false when power exceeds the bound
  bool vanishes = false;  // Lambda^power (or S^power) has zeta 1
};
std::vector<KimuraEntry> kimura_grading_check(const CategoryDatum& cat, unsigned s_bound = 16);

}  // namespace rigid

#endif  // RIGID_TATE_HPP_
