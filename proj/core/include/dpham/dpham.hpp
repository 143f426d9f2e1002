#pragma once

#include "dpham/construct.hpp"
#include "dpham/errors.hpp"
#include "dpham/formats.hpp"
#include "dpham/graph.hpp"
#include "dpham/oracle.hpp"
#include "dpham/sweep.hpp"
#include "dpham/verify.hpp"
