import os

# keep test runs from writing logs/app.log into the checkout
os.environ.setdefault("GLE_LOG_FILE", "false")
os.environ.setdefault("GLE_LOG_LEVEL", "WARNING")
