#pragma once

#include "intseq/companion.hpp"
#include "intseq/driver.hpp"
#include "intseq/error.hpp"
#include "intseq/numeric.hpp"
#include "intseq/polynomial.hpp"
#include "intseq/sequence.hpp"
