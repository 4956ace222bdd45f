// Umbrella header.
#pragma once

#include "gcls/core.hpp"
#include "gcls/encode.hpp"
#include "gcls/io.hpp"
#include "gcls/matching.hpp"
#include "gcls/musat.hpp"
#include "gcls/reductions.hpp"
#include "gcls/satdec.hpp"
#include "gcls/structure.hpp"
#include "gcls/translate.hpp"
