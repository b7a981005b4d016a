from argaudit.cli import main

raise SystemExit(main())
