#pragma once

// Convenience umbrella: the whole library.

#include "rectfill/numeric.hpp"
#include "rectfill/filling.hpp"
#include "rectfill/enumerate.hpp"
#include "rectfill/polynomial.hpp"
#include "rectfill/series.hpp"
#include "rectfill/poset.hpp"
#include "rectfill/symfun.hpp"
#include "rectfill/paths.hpp"
