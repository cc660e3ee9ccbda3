#pragma once

#include "cookie/errors.hpp"
#include "cookie/jar_state.hpp"
#include "cookie/sequences.hpp"
#include "cookie/bounds.hpp"
#include "cookie/strategies.hpp"
#include "cookie/bound_report.hpp"
#include "cookie/solver.hpp"
#include "cookie/family_table.hpp"
#include "cookie/io.hpp"
