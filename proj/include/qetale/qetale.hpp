#pragma once

#include "qetale/errors.hpp"
#include "qetale/rat.hpp"
#include "qetale/ring.hpp"
#include "qetale/polynomial.hpp"
#include "qetale/upoly.hpp"
#include "qetale/mvgcd.hpp"
#include "qetale/ratfun.hpp"
#include "qetale/matrix.hpp"
#include "qetale/expr_io.hpp"
#include "qetale/subresultant.hpp"
#include "qetale/realroots.hpp"
#include "qetale/zerodim.hpp"
#include "qetale/rur.hpp"
#include "qetale/radical.hpp"
#include "qetale/funfield.hpp"
#include "qetale/parametric.hpp"
#include "qetale/sections.hpp"
#include "qetale/collins.hpp"
