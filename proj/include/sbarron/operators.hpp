//==============================================================================
//
// Copyright 2026 The sbarron Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
//==============================================================================

#pragma once

// Spectral multipliers and group convolution.

#include <map>

#include "sbarron/fourier.hpp"
#include "sbarron/spectra.hpp"

namespace sbarron {

// Complex scalar symbol a(sigma) of a spectral pseudo-differential operator.
struct SpectralSymbol {
  std::map<int, Complex> table;

  Complex at(IrrepLabel sigma) const;

  // a(sigma) = (1 + gamma(sigma)^2)^exponent on every label of the dual.
  static SpectralSymbol bessel(const TruncatedDual& dual, const Weight& gamma,
                               double exponent);
  static SpectralSymbol constant(const TruncatedDual& dual, Complex value);
};

// Multiplies block sigma by (1 + gamma(sigma)^2)^w.s. The exponent is applied
// as given, so the operator maps order 2s onto order 0.
FourierCoefficients bessel_potential(const FourierCoefficients& c,
                                     const Weight& w);

// Multiplies block sigma by a(sigma). Throws ConfigError if the symbol is
// missing a label of the dual.
FourierCoefficients pseudo_diff(const FourierCoefficients& c,
                                const SpectralSymbol& a);

// (f * g)(x_k) = sum_m w_m f(y_m) g(y_m^{-1} x_k) on a node set closed under
// the group law (finite groups, uniform torus grids).
GridFunction convolve_direct(const GridFunction& f, const GridFunction& g);

// Block sigma of the result is the d x d product F(sigma) G(sigma) with A
// products taken in the order f then g.
FourierCoefficients convolve_spectral(const FourierCoefficients& fc,
                                      const FourierCoefficients& gc);

}  // namespace sbarron
