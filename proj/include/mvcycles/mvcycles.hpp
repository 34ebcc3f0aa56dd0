#pragma once

#include "mvcycles/collapse.hpp"
#include "mvcycles/compat.hpp"
#include "mvcycles/exact_lp.hpp"
#include "mvcycles/field.hpp"
#include "mvcycles/io.hpp"
#include "mvcycles/kostant.hpp"
#include "mvcycles/lattice.hpp"
#include "mvcycles/polytope.hpp"
#include "mvcycles/svg.hpp"
#include "mvcycles/term_vector.hpp"
#include "mvcycles/verify.hpp"
