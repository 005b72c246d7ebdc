#pragma once

// Everything except the request handlers, which pull in the JSON envelope.

#include "straightknot/bounds.hpp"
#include "straightknot/diagram.hpp"
#include "straightknot/dt_code.hpp"
#include "straightknot/errors.hpp"
#include "straightknot/invariants.hpp"
#include "straightknot/laurent.hpp"
#include "straightknot/planarity.hpp"
#include "straightknot/realize.hpp"
#include "straightknot/search.hpp"
#include "straightknot/svg.hpp"
#include "straightknot/words.hpp"
