#pragma once

#include "count.hpp"
#include "fp.hpp"
#include "group.hpp"
#include "growth.hpp"
#include "ideal_enum.hpp"
#include "initial.hpp"
#include "monomial.hpp"
#include "quotient.hpp"
#include "reports.hpp"
#include "seqopt.hpp"
#include "sl2.hpp"
#include "staircase.hpp"
