#pragma once

#include "splitq/consimilarity.hpp"
#include "splitq/error.hpp"
#include "splitq/linalg.hpp"
#include "splitq/matrices.hpp"
#include "splitq/parse.hpp"
#include "splitq/pinv.hpp"
#include "splitq/roots.hpp"
#include "splitq/scalar.hpp"
#include "splitq/similarity.hpp"
#include "splitq/solvers.hpp"
#include "splitq/split_quaternion.hpp"
