#pragma once

#include "maxlab/corpus.hpp"
#include "maxlab/grid.hpp"
#include "maxlab/io.hpp"
#include "maxlab/maximal.hpp"
#include "maxlab/norms.hpp"
#include "maxlab/orlicz.hpp"
#include "maxlab/suites.hpp"
#include "maxlab/verify.hpp"
