#pragma once

#include "talex/alexander.hpp"
#include "talex/burau.hpp"
#include "talex/convert.hpp"
#include "talex/exterior.hpp"
#include "talex/io.hpp"
#include "talex/laurent.hpp"
#include "talex/matrix.hpp"
#include "talex/oracle.hpp"
#include "talex/plat.hpp"
#include "talex/random.hpp"
#include "talex/tangle.hpp"
