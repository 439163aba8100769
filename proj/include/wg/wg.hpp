#pragma once

#include "wg/cache.hpp"
#include "wg/characters.hpp"
#include "wg/exact.hpp"
#include "wg/genfun.hpp"
#include "wg/parallel.hpp"
#include "wg/partitions.hpp"
#include "wg/report.hpp"
#include "wg/scanner.hpp"
#include "wg/selftest.hpp"
#include "wg/walks.hpp"
