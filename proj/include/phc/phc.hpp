#pragma once

#include "antipode.hpp"
#include "coefficient.hpp"
#include "core.hpp"
#include "packed_word.hpp"
#include "parking.hpp"
#include "pattern_algebra.hpp"
#include "permutation.hpp"
#include "species.hpp"
#include "verify.hpp"
