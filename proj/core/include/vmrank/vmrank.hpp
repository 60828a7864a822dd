#pragma once

#include "vmrank/catalog.hpp"
#include "vmrank/errors.hpp"
#include "vmrank/exact_matrix.hpp"
#include "vmrank/gaussian_rational.hpp"
#include "vmrank/graph.hpp"
#include "vmrank/json_io.hpp"
#include "vmrank/lab.hpp"
#include "vmrank/partition_function.hpp"
#include "vmrank/permutation.hpp"
#include "vmrank/polynomial.hpp"
#include "vmrank/report.hpp"
#include "vmrank/symmetric_group.hpp"
#include "vmrank/vertex_model.hpp"
#include "vmrank/young.hpp"
