#pragma once

#include "rivercross/bigint.hpp"
#include "rivercross/digraph.hpp"
#include "rivercross/family.hpp"
#include "rivercross/model.hpp"
#include "rivercross/species.hpp"
#include "rivercross/state_graph.hpp"
#include "rivercross/strategy.hpp"
#include "rivercross/transfer.hpp"
#include "rivercross/walks.hpp"
