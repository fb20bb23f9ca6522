from permeq.cli.main import main

raise SystemExit(main())
