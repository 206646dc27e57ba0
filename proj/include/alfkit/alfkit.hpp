#pragma once

#include "alfkit/alf.hpp"
#include "alfkit/classify.hpp"
#include "alfkit/core.hpp"
#include "alfkit/gf2.hpp"
#include "alfkit/homology.hpp"
#include "alfkit/json_io.hpp"
#include "alfkit/matrix.hpp"
#include "alfkit/parse.hpp"
#include "alfkit/spin.hpp"
#include "alfkit/surface.hpp"
#include "alfkit/word.hpp"
