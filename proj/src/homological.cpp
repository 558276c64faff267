#include "rigid/homological.hpp"

#include "rigid/errors.hpp"

namespace rigid {

namespace {

Matrix minus_one(const Matrix& m) { return m - Matrix::identity(m.rows()); }

std::size_t fixed_dim(const Matrix& m) { return m.rows() - minus_one(m).rank(); }

void check_automorphism(const Matrix& m, const char* name) {
  if (!m.is_square()) throw InvalidRealizedObject(std::string(name) + " is not square");
  if (!m.empty() && m.determinant() == 0) throw InvalidRealizedObject(std::string(name) + " is not invertible");
}

}  // namespace

RealizedObject::RealizedObject(Matrix f_plus, Matrix f_minus, std::vector<Vector> hom_image, std::size_t nil_dim)
    : f_plus_(std::move(f_plus)), f_minus_(std::move(f_minus)), hom_image_(std::move(hom_image)), nil_dim_(nil_dim) {
  check_automorphism(f_plus_, "fplus");
  check_automorphism(f_minus_, "fminus");
  const std::size_t n = f_plus_.rows();
  for (std::size_t k = 0; k < hom_image_.size(); ++k) {
    const Vector& v = hom_image_[k];
    if (v.size() != n) throw InvalidRealizedObject("hom_image[" + std::to_string(k) + "] has the wrong length");
    if (f_plus_ * v != v) throw InvalidRealizedObject("hom_image[" + std::to_string(k) + "] is not fixed by fplus");
  }
  if (rank_of(hom_image_, n) != hom_image_.size()) throw InvalidRealizedObject("hom_image is linearly dependent");
  if (nil_dim_ > hom_image_.size()) throw InvalidRealizedObject("nil_dim exceeds dim Hom(1, M)");
}

SignProjectorResult build_sign_projector(const RealizedObject& r) {
  SignProjectorResult out;
  out.p_plus = r.f_plus().charpoly();
  out.p_minus = r.f_minus().charpoly();
  if (!gcd(out.p_plus, out.p_minus).is_constant()) {
    throw CommonFactor("even and odd parts share the eigenvalues of " + gcd(out.p_plus, out.p_minus).to_string());
  }
  if (out.p_plus.is_constant()) {
    out.pi = Polynomial();
  } else if (out.p_minus.is_constant()) {
    out.pi = Polynomial::constant(1);
  } else {
    out.pi = (out.p_minus * inverse_mod(out.p_minus % out.p_plus, out.p_plus)) % (out.p_plus * out.p_minus);
  }
  const bool ok = r.f_plus().evaluate(out.pi) == Matrix::identity(r.f_plus().rows()) &&
                  r.f_minus().evaluate(out.pi).is_zero();
  if (!ok) throw DomainError("sign projector failed verification");
  return out;
}

bool check_semisimplicity_at_one(const RealizedObject& r) {
  const Matrix g = minus_one(r.f());
  return g.rank() == (g * g).rank();
}

std::size_t generalized_one_eigenspace_dim(const Matrix& m) {
  // the kernel of (m - 1)^n is the whole generalized eigenspace
  return m.rows() - minus_one(m).pow(static_cast<unsigned>(m.rows())).rank();
}

T5Report check_t5_conditions(const RealizedObject& r) {
  T5Report out;
  out.ord_z = static_cast<int>(generalized_one_eigenspace_dim(r.f_minus())) -
              static_cast<int>(generalized_one_eigenspace_dim(r.f_plus()));
  out.hom_dim = static_cast<long>(r.hom_image().size()) - static_cast<long>(r.nil_dim());
  const std::size_t odd_fixed = fixed_dim(r.f_minus());
  out.fixed_dim = fixed_dim(r.f_plus()) + odd_fixed;
  out.semisimple_at_one = check_semisimplicity_at_one(r);
  // the image sits inside H+^F, so it is everything iff the dimensions match
  const bool surjective = r.hom_image().size() == out.fixed_dim;

  out.i = out.ord_z == -out.hom_dim;
  out.ii = surjective && out.semisimple_at_one;
  out.iii = surjective && r.nil_dim() == 0;
  try {
    out.projector = build_sign_projector(r);
  } catch (const CommonFactor&) {
  }
  out.iv = out.projector.has_value();
  out.v = odd_fixed == 0;

  out.equivalence = (out.i && out.v) == (out.ii && out.iii);
  out.i_iv_implies_v = !(out.i && out.iv) || out.v;
  out.v_implies_iv = !out.v || out.iv;
  return out;
}

CorollaryReport corollary_c1_report(const std::vector<RealizedObject>& family) {
  CorollaryReport out;
  for (const auto& r : family) {
    FamilyMember m;
    try {
      build_sign_projector(r);
    } catch (const CommonFactor&) {
      m.sign = false;
    }
    m.odd_fixed_zero = fixed_dim(r.f_minus()) == 0;
    out.sign_all = out.sign_all && m.sign;
    out.odd_fixed_zero_all = out.odd_fixed_zero_all && m.odd_fixed_zero;
    out.members.push_back(m);
  }
  out.implication = !out.odd_fixed_zero_all || out.sign_all;
  return out;
}

}  // namespace rigid
