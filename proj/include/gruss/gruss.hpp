#pragma once

#include "gruss/bounds.hpp"
#include "gruss/enclosure.hpp"
#include "gruss/error.hpp"
#include "gruss/polynomials.hpp"
#include "gruss/sequence.hpp"
#include "gruss/sharpness.hpp"
#include "gruss/space.hpp"
#include "gruss/summation.hpp"
#include "gruss/transforms.hpp"

namespace gruss {
inline constexpr const char* kVersion = "0.1.0";
}
