from typing import Dict, Any, List, Optional
import json
import sqlite3
from pathlib import Path

from config import HISTORY_DB_PATH


class RunHistory:
    """Ledger of CLI runs"""

    def __init__(self, db_path: str = None):
        self.db_path = str(db_path or HISTORY_DB_PATH)
        self.init_database()

    def init_database(self):
        """Initialize the run history database"""
        Path(self.db_path).parent.mkdir(parents=True, exist_ok=True)

        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            CREATE TABLE IF NOT EXISTS run_history (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                command TEXT NOT NULL,
                config TEXT NOT NULL,
                config_hash TEXT NOT NULL,
                status TEXT NOT NULL,
                exit_code INTEGER NOT NULL,
                row_count INTEGER DEFAULT 0,
                output_paths TEXT,
                timestamp DATETIME DEFAULT CURRENT_TIMESTAMP
            )
        ''')

        conn.commit()
        conn.close()

    def add_run(self, command: str, config_json: str, config_hash: str, status: str,
                exit_code: int, row_count: int = 0, output_paths: List[str] = None) -> int:
        """Add a run record"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            INSERT INTO run_history
            (command, config, config_hash, status, exit_code, row_count, output_paths)
            VALUES (?, ?, ?, ?, ?, ?, ?)
        ''', (command, config_json, config_hash, status, exit_code, row_count,
              json.dumps(output_paths or [])))

        record_id = cursor.lastrowid
        conn.commit()
        conn.close()

        return record_id

    @staticmethod
    def _to_dict(record) -> Dict[str, Any]:
        return {
            "id": record[0],
            "command": record[1],
            "config": json.loads(record[2]),
            "config_hash": record[3],
            "status": record[4],
            "exit_code": record[5],
            "row_count": record[6],
            "output_paths": json.loads(record[7]) if record[7] else [],
            "timestamp": record[8],
        }

    def get_runs(self, limit: int = 20, command: Optional[str] = None) -> list:
        """Get the most recent runs, newest first"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        query = '''
            SELECT id, command, config, config_hash, status, exit_code,
                   row_count, output_paths, timestamp
            FROM run_history
        '''
        params: tuple = ()
        if command:
            query += ' WHERE command = ?'
            params = (command,)
        query += ' ORDER BY id DESC LIMIT ?'
        cursor.execute(query, params + (limit,))

        records = cursor.fetchall()
        conn.close()

        return [self._to_dict(record) for record in records]

    def get_run(self, run_id: int) -> Optional[Dict[str, Any]]:
        """Get a specific run by ID"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            SELECT id, command, config, config_hash, status, exit_code,
                   row_count, output_paths, timestamp
            FROM run_history
            WHERE id = ?
        ''', (run_id,))

        record = cursor.fetchone()
        conn.close()

        return self._to_dict(record) if record else None

    def get_stats(self) -> Dict[str, Any]:
        """Run counts per command and status"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('SELECT COUNT(*) FROM run_history')
        total_runs = cursor.fetchone()[0]

        cursor.execute('''
            SELECT command, status, COUNT(*)
            FROM run_history
            GROUP BY command, status
        ''')
        rows = cursor.fetchall()
        conn.close()

        by_command: Dict[str, Dict[str, int]] = {}
        for command, status, count in rows:
            by_command.setdefault(command, {})[status] = count
        return {"total_runs": total_runs, "by_command": by_command}
