#pragma once

#include "maxstretch/bench.hpp"
#include "maxstretch/counting.hpp"
#include "maxstretch/error.hpp"
#include "maxstretch/matrix.hpp"
#include "maxstretch/phi.hpp"
#include "maxstretch/solvers.hpp"
