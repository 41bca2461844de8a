#pragma once

#include "eqlines/bounds.hpp"
#include "eqlines/certificate.hpp"
#include "eqlines/designs.hpp"
#include "eqlines/engine.hpp"
#include "eqlines/exact.hpp"
#include "eqlines/frames.hpp"
#include "eqlines/render.hpp"
#include "eqlines/srg.hpp"
#include "eqlines/srg_database.hpp"
#include "eqlines/verifier.hpp"
