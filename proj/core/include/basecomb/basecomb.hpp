#pragma once

#include "basecomb/bivar_poly.hpp"
#include "basecomb/coeffs.hpp"
#include "basecomb/digits.hpp"
#include "basecomb/exponential.hpp"
#include "basecomb/fibonacci.hpp"
#include "basecomb/series.hpp"
#include "basecomb/stirling.hpp"
#include "basecomb/summation.hpp"
#include "basecomb/types.hpp"
#include "basecomb/verify.hpp"
