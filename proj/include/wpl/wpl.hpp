#pragma once

#include "collection.hpp"
#include "errors.hpp"
#include "graded_ring.hpp"
#include "grading_group.hpp"
#include "integer.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "presentation.hpp"
#include "quiver.hpp"
#include "verification.hpp"
#include "verify.hpp"
