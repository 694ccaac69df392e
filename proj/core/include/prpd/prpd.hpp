#pragma once

#include "prpd/bottleneck.hpp"
#include "prpd/diagram_io.hpp"
#include "prpd/error.hpp"
#include "prpd/graph.hpp"
#include "prpd/ingest.hpp"
#include "prpd/pagerank.hpp"
#include "prpd/persistence.hpp"
#include "prpd/pipeline.hpp"
#include "prpd/synthetic.hpp"
