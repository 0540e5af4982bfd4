#pragma once

#include "synkit/automaton.hpp"
#include "synkit/construct.hpp"
#include "synkit/errors.hpp"
#include "synkit/ideal.hpp"
#include "synkit/io.hpp"
#include "synkit/search.hpp"
#include "synkit/subset.hpp"
#include "synkit/syntactic.hpp"
#include "synkit/word.hpp"
