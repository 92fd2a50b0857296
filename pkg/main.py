import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

# Add project root to path
current_dir = Path(__file__).parent
sys.path.insert(0, str(current_dir))

# Load environment variables
load_dotenv()

from config import LOG_LEVEL  # noqa: E402
from tools.zdl_cli import main  # noqa: E402

# Setup logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[logging.StreamHandler()]
)

if __name__ == "__main__":
    sys.exit(main())
