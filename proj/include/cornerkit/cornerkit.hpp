#pragma once

#include "cornerkit/charfun.hpp"
#include "cornerkit/checks.hpp"
#include "cornerkit/error.hpp"
#include "cornerkit/invariants.hpp"
#include "cornerkit/iso.hpp"
#include "cornerkit/lattice.hpp"
#include "cornerkit/log.hpp"
#include "cornerkit/poset.hpp"
#include "cornerkit/recognize.hpp"
#include "cornerkit/serialize.hpp"
#include "cornerkit/shelling.hpp"
