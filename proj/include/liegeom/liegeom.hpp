#pragma once

#include "error.hpp"
#include "tensor.hpp"
#include "liealg.hpp"
#include "metric.hpp"
#include "curvature.hpp"
#include "polynomial.hpp"
#include "einstein.hpp"
#include "repthy.hpp"
