# Run configuration and run history
