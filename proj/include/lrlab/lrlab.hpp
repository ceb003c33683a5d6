#pragma once

#include "cases.hpp"
#include "characters.hpp"
#include "constants.hpp"
#include "format.hpp"
#include "lseries.hpp"
#include "modforms.hpp"
#include "multfn.hpp"
#include "numeric.hpp"
#include "primes.hpp"
#include "reference.hpp"
#include "verify.hpp"
