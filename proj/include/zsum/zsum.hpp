#pragma once

#include "zsum/cache.hpp"
#include "zsum/error.hpp"
#include "zsum/factorize.hpp"
#include "zsum/group.hpp"
#include "zsum/invariants.hpp"
#include "zsum/parse.hpp"
#include "zsum/pinned.hpp"
#include "zsum/scan.hpp"
#include "zsum/sequence.hpp"
#include "zsum/serialize.hpp"
#include "zsum/tame.hpp"
#include "zsum/verify.hpp"
#include "zsum/version.hpp"
#include "zsum/witnesses.hpp"
