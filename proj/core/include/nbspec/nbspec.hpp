#pragma once

#include "nbspec/analysis.hpp"
#include "nbspec/blas_env.hpp"
#include "nbspec/eig.hpp"
#include "nbspec/error.hpp"
#include "nbspec/graph.hpp"
#include "nbspec/linalg.hpp"
#include "nbspec/matrix.hpp"
#include "nbspec/operators.hpp"
#include "nbspec/qep.hpp"
#include "nbspec/report.hpp"
#include "nbspec/svg.hpp"
