#pragma once

#include "wopkit/construct.hpp"
#include "wopkit/discover.hpp"
#include "wopkit/enumerate.hpp"
#include "wopkit/errors.hpp"
#include "wopkit/inequality.hpp"
#include "wopkit/io.hpp"
#include "wopkit/move.hpp"
#include "wopkit/rank.hpp"
#include "wopkit/verify.hpp"
#include "wopkit/weak_order.hpp"
