#pragma once

#include "divpow/exact.hpp"
#include "divpow/gamma.hpp"
#include "divpow/gen_decomp.hpp"
#include "divpow/linalg.hpp"
#include "divpow/norm_map.hpp"
#include "divpow/rep_hilb.hpp"
#include "divpow/sampling.hpp"
#include "divpow/symfun.hpp"
#include "divpow/ts_oracle.hpp"
#include "divpow/words.hpp"
