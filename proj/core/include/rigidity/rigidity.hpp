#pragma once

#include "rigidity/blowup.hpp"
#include "rigidity/bounds.hpp"
#include "rigidity/embedding.hpp"
#include "rigidity/families.hpp"
#include "rigidity/framework.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/io.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/optimizer.hpp"
#include "rigidity/random.hpp"
#include "rigidity/spectra.hpp"
