#include "weylsys/sampled.hpp"

namespace weylsys {

SampledFunction m_function_sampled(const MFunction& mf) {
  return {[mf](Complex z) { return mf.eval(z).value; }, DomainTag::ext_nonneg_axis};
}

SampledFunction neg_m_sampled(const MFunction& mf) {
  return {[mf](Complex z) { return -mf.eval(z).value; }, DomainTag::ext_nonneg_axis};
}

SampledFunction recip_m_sampled(const MFunction& mf) {
  return {[mf](Complex z) { return 1.0 / mf.eval(z).value; }, DomainTag::ext_nonneg_axis};
}

SampledFunction neg_m_alpha_sampled(const MFunction& mf, const AlphaParam& a) {
  return {[mf, a](Complex z) { return neg_m_alpha(mf.eval(z).value, a, mf.tol().abs_tol); },
          DomainTag::ext_nonneg_axis};
}

}  // namespace weylsys
