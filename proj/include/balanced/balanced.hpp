#pragma once

#include "balanced/words.hpp"
#include "balanced/admissibility.hpp"
#include "balanced/euclid_smith.hpp"
#include "balanced/oracle.hpp"
#include "balanced/sweeps.hpp"
