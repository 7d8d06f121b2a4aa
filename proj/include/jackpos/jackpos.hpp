#pragma once

#include "jackpos/errors.hpp"
#include "jackpos/expr_parse.hpp"
#include "jackpos/interpolate.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/json_io.hpp"
#include "jackpos/mpoly.hpp"
#include "jackpos/parallel.hpp"
#include "jackpos/partition.hpp"
#include "jackpos/ratfunc.hpp"
#include "jackpos/rect.hpp"
#include "jackpos/symfun.hpp"
#include "jackpos/theta.hpp"
#include "jackpos/verify.hpp"
