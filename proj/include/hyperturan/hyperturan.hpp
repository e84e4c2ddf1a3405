#pragma once

#include "bits.hpp"
#include "cache.hpp"
#include "catalog.hpp"
#include "constructions.hpp"
#include "density.hpp"
#include "export.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "morphisms.hpp"
#include "stability.hpp"
#include "turan.hpp"
