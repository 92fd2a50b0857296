# Cache, manifest and report helpers
