#pragma once

#include "weylsys/funclass.hpp"
#include "weylsys/malpha.hpp"
#include "weylsys/weyl_engine.hpp"

namespace weylsys {

// Adapters turning an m-function into the scalar functions the class tests sample.
// The MFunction is copied into the closure.

SampledFunction m_function_sampled(const MFunction& mf);
SampledFunction neg_m_sampled(const MFunction& mf);
SampledFunction recip_m_sampled(const MFunction& mf);
SampledFunction neg_m_alpha_sampled(const MFunction& mf, const AlphaParam& a);

}  // namespace weylsys
