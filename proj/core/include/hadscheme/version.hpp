#pragma once

#define HADSCHEME_VERSION_MAJOR 0
#define HADSCHEME_VERSION_MINOR 1
#define HADSCHEME_VERSION_PATCH 0
#define HADSCHEME_VERSION_STRING "0.1.0"
