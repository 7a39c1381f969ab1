#pragma once

#include "dfds/errors.hpp"
#include "dfds/sequence.hpp"
#include "dfds/graph.hpp"
#include "dfds/graphicality.hpp"
#include "dfds/realizer.hpp"
#include "dfds/pipeline.hpp"
#include "dfds/model_a.hpp"
#include "dfds/designs.hpp"
#include "dfds/verifier.hpp"
