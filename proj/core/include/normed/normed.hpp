#pragma once

#include "normed/category.hpp"
#include "normed/counterexamples.hpp"
#include "normed/errors.hpp"
#include "normed/free_algebra.hpp"
#include "normed/free_space.hpp"
#include "normed/norm_value.hpp"
#include "normed/normed_map.hpp"
#include "normed/normed_set.hpp"
#include "normed/rational.hpp"
#include "normed/scalar.hpp"
#include "normed/serialization.hpp"
#include "normed/verification.hpp"
