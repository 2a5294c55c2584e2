#pragma once

#include "mainspectra/exact.hpp"
#include "mainspectra/linalg.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/graph6.hpp"
#include "mainspectra/main_spectrum.hpp"
#include "mainspectra/equitable.hpp"
#include "mainspectra/seidel.hpp"
#include "mainspectra/constructions.hpp"
#include "mainspectra/census.hpp"
#include "mainspectra/serialize.hpp"
