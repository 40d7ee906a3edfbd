#pragma once

#include "bloch/generators.hpp"
#include "bloch/io.hpp"
#include "bloch/membership.hpp"
#include "bloch/sampling.hpp"
#include "bloch/sections3.hpp"
#include "bloch/separability.hpp"
#include "bloch/statemap.hpp"
#include "bloch/structure_constants.hpp"
#include "bloch/types.hpp"
