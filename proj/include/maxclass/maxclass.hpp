#pragma once

#include "maxclass/arith.hpp"
#include "maxclass/counting.hpp"
#include "maxclass/errors.hpp"
#include "maxclass/io.hpp"
#include "maxclass/oracle.hpp"
#include "maxclass/rootlog.hpp"
#include "maxclass/simplex.hpp"
#include "maxclass/stability.hpp"
#include "maxclass/standard_form.hpp"
#include "maxclass/twistshout.hpp"
#include "maxclass/verify.hpp"
#include "maxclass/zeta.hpp"
