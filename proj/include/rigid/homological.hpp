#ifndef RIGID_HOMOLOGICAL_HPP_
#define RIGID_HOMOLOGICAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rigid/matrix.hpp"

namespace rigid {

// A Z/2-graded Q-vector space with the action of F on each part, plus the
// category-side data that have no matrix definition: the image of Hom(1, M)
// in H+(M)^F and dim N(1, M). H is assumed faithful, so Hom(1, M) has the
// dimension of its image.
class RealizedObject {
 public:
  // Throws InvalidRealizedObject: non-square or singular F, image vectors of
  // the wrong length, not fixed, dependent, or nil_dim larger than the image.
  RealizedObject(Matrix f_plus, Matrix f_minus, std::vector<Vector> hom_image, std::size_t nil_dim);

  const Matrix& f_plus() const { return f_plus_; }
  const Matrix& f_minus() const { return f_minus_; }
  const std::vector<Vector>& hom_image() const { return hom_image_; }
  std::size_t nil_dim() const { return nil_dim_; }
  Matrix f() const { return block_diagonal(f_plus_, f_minus_); }

 private:
  Matrix f_plus_, f_minus_;
  std::vector<Vector> hom_image_;
  std::size_t nil_dim_;
};

struct SignProjectorResult {
  Polynomial pi;
  Polynomial p_plus;   // det(t - F | H+)
  Polynomial p_minus;  // det(t - F | H-)
};

// Pi = 1 mod P+ and Pi = 0 mod P-, checked on the matrices. Throws
// CommonFactor when gcd(P+, P-) != 1.
SignProjectorResult build_sign_projector(const RealizedObject& r);

// rank(F - 1) == rank((F - 1)^2) on H+ + H-.
bool check_semisimplicity_at_one(const RealizedObject& r);

// Dimension of the generalized eigenspace for 1.
std::size_t generalized_one_eigenspace_dim(const Matrix& m);

struct T5Report {
  int ord_z = 0;              // dim H-^{F^oo} - dim H+^{F^oo}
  long hom_dim = 0;           // dim of Hom(1, M) modulo N(1, M)
  std::size_t fixed_dim = 0;  // dim H(M)^F
  bool semisimple_at_one = true;
  bool i = true, ii = true, iii = true, iv = true, v = true;
  std::optional<SignProjectorResult> projector;
  // (i)+(v) <=> (ii)+(iii); (i)+(iv) => (v); (v) => (iv)
  bool equivalence = true;
  bool i_iv_implies_v = true;
  bool v_implies_iv = true;
  bool implications_hold() const { return equivalence && i_iv_implies_v && v_implies_iv; }
};
T5Report check_t5_conditions(const RealizedObject& r);

struct FamilyMember {
  bool sign = true;          // projector exists
  bool odd_fixed_zero = true;  // H-(M)^F = 0
};
struct CorollaryReport {
  std::vector<FamilyMember> members;
  bool sign_all = true;
  bool odd_fixed_zero_all = true;
  bool implication = true;  // odd_fixed_zero_all => sign_all
};
CorollaryReport corollary_c1_report(const std::vector<RealizedObject>& family);

}  // namespace rigid

#endif  // RIGID_HOMOLOGICAL_HPP_
