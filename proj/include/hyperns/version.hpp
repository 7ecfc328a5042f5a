#pragma once

#define HYPERNS_VERSION "0.1.0"
