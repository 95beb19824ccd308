#pragma once

// Umbrella header.
#include "splitpeb/error.hpp"
#include "splitpeb/graph.hpp"
#include "splitpeb/generators.hpp"
#include "splitpeb/oracle.hpp"
#include "splitpeb/recognition.hpp"
#include "splitpeb/formulas.hpp"
#include "splitpeb/strategy.hpp"
#include "splitpeb/io.hpp"
