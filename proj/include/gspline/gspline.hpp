#pragma once

#include <gspline/basis/criterion.hpp>
#include <gspline/basis/determinant.hpp>
#include <gspline/basis/lattice.hpp>
#include <gspline/core/construct.hpp>
#include <gspline/core/invariants.hpp>
#include <gspline/core/selection.hpp>
#include <gspline/core/spline.hpp>
#include <gspline/error.hpp>
#include <gspline/graph/labeled_graph.hpp>
#include <gspline/graph/trail.hpp>
#include <gspline/ring/ring.hpp>
