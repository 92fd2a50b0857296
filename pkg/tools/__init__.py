# Command-line tools
