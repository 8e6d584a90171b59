#pragma once

#include "bll/admissibility.hpp"
#include "bll/convex_polygon.hpp"
#include "bll/deformation.hpp"
#include "bll/errors.hpp"
#include "bll/functional.hpp"
#include "bll/fuzz.hpp"
#include "bll/instance_gen.hpp"
#include "bll/interval_set.hpp"
#include "bll/linear_form.hpp"
#include "bll/problem_io.hpp"
#include "bll/rational.hpp"
