#pragma once

#include "hlineq/errors.hpp"
#include "hlineq/form.hpp"
#include "hlineq/json_io.hpp"
#include "hlineq/ladder.hpp"
#include "hlineq/lp.hpp"
#include "hlineq/mixed.hpp"
#include "hlineq/opnorm.hpp"
#include "hlineq/rademacher.hpp"
#include "hlineq/regime.hpp"
#include "hlineq/rng.hpp"
#include "hlineq/search.hpp"
